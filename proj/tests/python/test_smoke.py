import collections
import json
import os
import shutil
import subprocess

import pytest

import jssec

PARAM_SNIPPETS = """
function a() {}
function b(x, y = 1, {z, w}, [q], ...rest) { return x; }
const c = (p) => p;
const d = async (p, q) => { return p + q; };
const o = {
  m(a1, a2, a3) {},
  get g() { return 1; },
  set s(v) {},
  async *gen(u) {},
};
class K {
  constructor(a, b, c, d, e, f) {}
  static make(...args) { return args; }
}
[1, 2].map(function (el, i, arr) { return el + i + arr.length; });
export default function (x1, x2) {}
"""

NODE_ORACLE = r"""
// Independent ECMAScript parser: every function-like node with its start line
// and parameter count.
const path = require('path');
const roots = process.env.ORACLE_ROOTS.split(path.delimiter);
let acorn = null;
for (const r of roots) {
  try { acorn = require(require.resolve('acorn', { paths: [r] })); break; } catch (e) {}
}
if (!acorn) { console.error('acorn not found'); process.exit(3); }
const src = require('fs').readFileSync(0, 'utf8');
const ast = acorn.parse(src, { ecmaVersion: 'latest', sourceType: 'module', locations: true });
const kinds = new Set(['FunctionDeclaration', 'FunctionExpression', 'ArrowFunctionExpression']);
const out = [];
(function visit(n) {
  if (!n || typeof n.type !== 'string') return;
  if (kinds.has(n.type)) out.push([n.loc.start.line, n.params.length]);
  for (const v of Object.values(n)) {
    if (Array.isArray(v)) v.forEach(visit);
    else if (v && typeof v === 'object') visit(v);
  }
})(ast);
console.log(JSON.stringify(out));
"""


def test_version_and_rules(source_dir):
    assert jssec.__version__ == "0.1.0"
    rules = jssec.list_rules()
    assert [r["id"] for r in rules] == [f"JSSEC-{i:03d}" for i in range(1, 25)]
    table = (source_dir / "tests" / "data" / "table1.tsv").read_text().splitlines()[1:]
    rows = {tuple(line.split("\t")) for line in table}
    assert {(r["name"], r["cwe_text"], r["owasp"]) for r in rules} == rows
    assert "Object.freeze" in jssec.explain("JSSEC-019")
    with pytest.raises(KeyError):
        jssec.explain("JSSEC-000")


def test_paper_examples():
    report = jssec.analyze_text('var result = eval("(" + json_string + ")");\n', path="a.js")
    ids = {f["rule_id"] for f in report["findings"]}
    assert {"JSSEC-009", "JSSEC-016"} <= ids

    report = jssec.analyze_text('<button onclick="foo();" id="myBtn"/>', path="p.html")
    assert [f["sub_code"] for f in report["findings"] if f["rule_id"] == "JSSEC-011"] == ["inline-handler"]

    report = jssec.analyze_text("el.innerHTML = location.hash;\n", path="d.js")
    (dom,) = [f for f in report["findings"] if f["rule_id"] == "JSSEC-014"]
    assert dom["severity"] == "error"
    assert [s["role"] for s in dom["chain"]][0] == "source"


def test_config_and_profile():
    text = "console.log(1);\neval(x);\n"
    base = jssec.analyze_text(text)
    assert {f["rule_id"] for f in base["findings"]} == {"JSSEC-009", "JSSEC-013"}
    off = jssec.analyze_text(text, config={"rules": {"JSSEC-013": False}})
    assert {f["rule_id"] for f in off["findings"]} == {"JSSEC-009"}
    assert off["config_digest"] != base["config_digest"]
    with pytest.raises(jssec.ConfigError):
        jssec.analyze_text(text, config={"thresholds": {"params": -1}})
    with pytest.raises(jssec.ConfigError):
        jssec.analyze_text(text, profile="desktop")
    page = '<button onclick="go()">x</button>'
    assert not jssec.analyze_text(page, path="p.html", profile="server")["findings"]


def test_paths_and_sarif(source_dir):
    fixtures = source_dir / "tests" / "fixtures" / "rules" / "JSSEC-020"
    report = jssec.analyze_paths([str(fixtures)])
    assert report["stats"]["files"] == 4
    assert sum(1 for f in report["findings"] if f["rule_id"] == "JSSEC-020") == 4

    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads((source_dir / "tests" / "data" / "sarif-schema-2.1.0.json").read_text())
    sarif = json.loads(jssec.render("eval(a);\n", path="x.js", format="sarif"))
    assert not list(jsonschema.Draft4Validator(schema).iter_errors(sarif))
    assert jssec.render("eval(a);\n", format="text").startswith("<stdin>:1:1 JSSEC-009 error")
    with pytest.raises(ValueError):
        jssec.analyze_paths(["does/not/exist.js"])


def test_parameter_counts_match_reference_parser():
    node = shutil.which("node")
    npm = shutil.which("npm")
    if node is None or npm is None:
        pytest.skip("node is not installed")
    root = subprocess.run([npm, "root", "-g"], capture_output=True, text=True).stdout.strip()
    roots = [root, os.path.join(root, "ts-node")]
    proc = subprocess.run(
        [node, "-e", NODE_ORACLE],
        input=PARAM_SNIPPETS,
        capture_output=True,
        text=True,
        env={"ORACLE_ROOTS": os.pathsep.join(roots), "PATH": os.environ.get("PATH", "")},
    )
    if proc.returncode == 3:
        pytest.skip("acorn is not installed")
    assert proc.returncode == 0, proc.stderr
    expected = collections.Counter(tuple(x) for x in json.loads(proc.stdout))
    got = collections.Counter((m["line"], m["params"]) for m in jssec.function_metrics(PARAM_SNIPPETS))
    assert sum(expected.values()) == 12
    assert got == expected


SAMPLE_CONFIG = {
    "profile": "server",
    "rules": {"JSSEC-013": {"exclude": ["scripts/**"]}, "JSSEC-021": False},
    "thresholds": {"params": 6, "function_loc": 80},
    "pattern_lists": {
        "sensitive_names": ["pin"],
        "sanitizers": {"mode": "extend", "entries": ["/clean.*/"]},
    },
    "path_excludes": ["**/vendor/**"],
    "strict_http": True,
}


def test_sample_config_matches_schema():
    jsonschema = pytest.importorskip("jsonschema")
    schema = json.loads(subprocess.run(
        [os.environ["JSSEC_CLI"], "--print-config-schema"], capture_output=True, text=True, check=True
    ).stdout) if "JSSEC_CLI" in os.environ else None
    if schema is None:
        pytest.skip("CLI path not provided")
    jsonschema.Draft7Validator.check_schema(schema)
    assert not list(jsonschema.Draft7Validator(schema).iter_errors(SAMPLE_CONFIG))
    assert list(jsonschema.Draft7Validator(schema).iter_errors({"rules": {"JSSEC-030": True}}))
    report = jssec.analyze_text("function f(a, b, c, d, e, g) {}\nf();\n", config=SAMPLE_CONFIG)
    assert not [f for f in report["findings"] if f["rule_id"] == "JSSEC-003"]
