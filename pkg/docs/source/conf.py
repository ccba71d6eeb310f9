import os
import sys
from importlib.metadata import PackageNotFoundError
from importlib.metadata import version as package_version

sys.path.insert(0, os.path.abspath("../../src"))


def get_version():
    # hatch-vcs が埋めたバージョンを使う。未インストールなら開発版扱い
    try:
        return package_version("rigiditybench")
    except PackageNotFoundError:
        return "0.0.0.dev0"


# -- Project information -----------------------------------------------------

project = "rigiditybench"
copyright = "2025, shimajiroxyz"
author = "shimajiroxyz"
release = get_version()
version = ".".join(release.split(".")[:2])
language = "ja"

# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",  # Google 形式の docstring
    "sphinx.ext.mathjax",  # F_q[t]/𝔪^l などの数式
    "sphinxcontrib.autodoc_pydantic",  # ExperimentConfig と Report
]

autodoc_member_order = "bysource"
autodoc_typehints = "description"
autodoc_default_options = {
    "members": True,
    "show-inheritance": True,
}

napoleon_google_docstring = True
napoleon_numpy_docstring = False
napoleon_use_rtype = False

autodoc_pydantic_model_show_json = False
autodoc_pydantic_settings_show_json = False
autodoc_pydantic_model_show_validator_summary = False
autodoc_pydantic_field_list_validators = False

templates_path = ["_templates"]
exclude_patterns = []

# -- Options for HTML output -------------------------------------------------

html_theme = "sphinx_rtd_theme"
html_theme_options = {
    "navigation_depth": 3,
}
