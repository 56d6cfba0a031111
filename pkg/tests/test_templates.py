from pathlib import Path
from typing import Set
import jinja2
from jinja2 import meta, Environment
import pytest

TEMPLATE_DIR = Path(__file__).resolve().parents[1] / "templates"

# Names render_plan_svg passes to every template
RENDER_CONTEXT = {"plan", "inst", "lays", "view_width", "view_height", "width", "height", "mean_ur_pct"}


def get_all_template_files():
    """Recursively find all template files in the templates directory"""
    return list(TEMPLATE_DIR.glob("**/*.svg"))


def extract_template_variables(template_path: Path) -> Set[str]:
    """
    Extract all undeclared variables from a Jinja2 template.

    Args:
        template_path: Path to the template file

    Returns:
        Set of variable names used in the template
    """
    env = Environment()
    try:
        ast = env.parse(template_path.read_text())
        return meta.find_undeclared_variables(ast)
    except jinja2.exceptions.TemplateSyntaxError as e:
        pytest.fail(f"Syntax error in template {template_path}: {str(e)}")


def test_templates_exist():
    assert len(get_all_template_files()) > 0, "No template files found"


@pytest.mark.parametrize("template_file", get_all_template_files())
def test_template_syntax(template_file: Path):
    """Test that templates have valid Jinja2 syntax"""
    try:
        Environment().parse(template_file.read_text())
    except jinja2.exceptions.TemplateSyntaxError as e:
        pytest.fail(f"Syntax error in template {template_file}: {str(e)}")


@pytest.mark.parametrize("template_file", get_all_template_files())
def test_template_variables_are_provided(template_file: Path):
    """Every variable a template uses must be passed by the renderer"""
    variables = extract_template_variables(template_file)
    missing = variables - RENDER_CONTEXT
    assert not missing, f"{template_file.name} uses variables the renderer does not pass: {missing}"
