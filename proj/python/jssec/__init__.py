"""Python bindings for the jssec JavaScript security smell analyzer."""

import json

from . import _jssec
from ._jssec import ConfigError, __version__, default_config, explain, function_metrics, list_rules

__all__ = [
    "ConfigError",
    "__version__",
    "analyze_paths",
    "analyze_text",
    "default_config",
    "explain",
    "function_metrics",
    "list_rules",
    "render",
]


def _config_text(config):
    if config is None or isinstance(config, str):
        return config
    return json.dumps(config)


def analyze_text(text, path="<stdin>", config=None, profile=None, show_suppressed=False):
    """Analyze one JavaScript or HTML document; returns the JSON report as a dict."""
    out = _jssec.analyze_text(text, path, _config_text(config), profile, "json", show_suppressed)
    return json.loads(out)


def analyze_paths(paths, config=None, profile=None, show_suppressed=False):
    """Analyze files, directories or globs; returns the JSON report as a dict."""
    if isinstance(paths, str):
        paths = [paths]
    out = _jssec.analyze_paths(list(paths), _config_text(config), profile, "json", show_suppressed)
    return json.loads(out)


def render(text, path="<stdin>", format="text", config=None, profile=None):
    """Report for one document in text, json or sarif form."""
    return _jssec.analyze_text(text, path, _config_text(config), profile, format, False)
