"""Reference CodeBLEU component scores from the Python `codebleu` package.

Reads a JSON list of {"name", "candidate", "reference"} from argv[1] and
writes scores to stdout. Run with PYTHONHASHSEED=0 for a reproducible
`unpatched_codebleu`.

The package merges variable-name lists through `set`, so its data-flow score
depends on PYTHONHASHSEED. The oracle loads patched copies of the data-flow
modules where those unions keep first-occurrence order, and also records the
range of the unpatched score over a few hash seeds.
"""
import json
import os
import subprocess
import sys
import types

import codebleu
from codebleu import calc_codebleu
from codebleu.utils import get_tree_sitter_language
from tree_sitter import Parser

PKG = os.path.dirname(codebleu.__file__)


def patched(module_name, path, extra):
    src = open(path).read().replace("list(set(", "list(dict.fromkeys(")
    mod = types.ModuleType(module_name)
    mod.__dict__.update(extra)
    exec(compile(src, path, "exec"), mod.__dict__)
    return mod


def load_stable():
    from codebleu.parser import utils as putils

    dfg = patched("dfg_stable", os.path.join(PKG, "parser", "DFG.py"), {
        "__package__": "codebleu.parser",
    })
    match = patched("dfm_stable", os.path.join(PKG, "dataflow_match.py"), {
        "__package__": "codebleu",
    })
    match.DFG_java = dfg.DFG_java
    match.remove_comments_and_docstrings = putils.remove_comments_and_docstrings
    return match, dfg.DFG_java


STABLE, STABLE_DFG_JAVA = load_stable()


def stable_dataflow(candidate, reference):
    parser = Parser(get_tree_sitter_language("java"))
    cand = STABLE.remove_comments_and_docstrings(candidate, "java")
    ref = STABLE.remove_comments_and_docstrings(reference, "java")
    cand_dfg = STABLE.normalize_dataflow(STABLE.get_data_flow(cand, [parser, STABLE_DFG_JAVA]))
    ref_dfg = STABLE.normalize_dataflow(STABLE.get_data_flow(ref, [parser, STABLE_DFG_JAVA]))
    if not ref_dfg:
        return 0.0, 0
    total = len(ref_dfg)
    matched = 0
    for item in ref_dfg:
        if item in cand_dfg:
            matched += 1
            cand_dfg.remove(item)
    return matched / total, total


def seeded_range(path, seeds=range(8)):
    lo, hi = {}, {}
    for seed in seeds:
        env = dict(os.environ, PYTHONHASHSEED=str(seed))
        out = subprocess.run([sys.executable, __file__, "--raw", path], env=env, capture_output=True, text=True, check=True)
        for name, score in json.loads(out.stdout).items():
            lo[name] = min(lo.get(name, score), score)
            hi[name] = max(hi.get(name, score), score)
    return lo, hi


def main():
    if sys.argv[1] == "--raw":
        cases = json.load(open(sys.argv[2]))
        raw = {c["name"]: calc_codebleu([c["reference"]], [c["candidate"]], "java")["dataflow_match_score"] for c in cases}
        json.dump(raw, sys.stdout)
        return
    cases = json.load(open(sys.argv[1]))
    lo, hi = seeded_range(sys.argv[1])
    out = []
    for case in cases:
        r = calc_codebleu([case["reference"]], [case["candidate"]], "java")
        df, edges = stable_dataflow(case["candidate"], case["reference"])
        out.append({
            "name": case["name"],
            "candidate": case["candidate"],
            "reference": case["reference"],
            "ngram": r["ngram_match_score"],
            "weighted_ngram": r["weighted_ngram_match_score"],
            "ast_match": r["syntax_match_score"],
            "dataflow_match": df,
            "reference_dataflow_edges": edges,
            "unpatched_dataflow_range": [lo[case["name"]], hi[case["name"]]],
            "unpatched_codebleu": r["codebleu"],
        })
    json.dump(out, sys.stdout, indent=1)


if __name__ == "__main__":
    main()
