"""Generate small Java fixtures and count LOC, CC and FOUT independently.

CC is counted on a token stream: one per callable plus one per `if`, `for`,
`while`, `catch`, `case`, ternary `?`, `&&` and `||`. A do-while contributes
its trailing `while` only, so `do` itself is not counted. Callables are
counted from header shapes. FOUT is counted twice, from the token stream
and from py-tree-sitter `method_invocation` nodes, and the two must agree.

    python metrics_oracle.py OUT_DIR
"""
import json
import os
import random
import re
import sys

TOKEN = re.compile(
    r'//[^\n]*|/\*.*?\*/|"(?:\\.|[^"\\])*"|\'(?:\\.|[^\'\\])*\'|[A-Za-z_$][\w$]*|\d+(?:\.\d+)?[LfdD]?|&&|\|\||->|::|[^\s\w]',
    re.S,
)
KEYWORDS = {
    "if", "for", "while", "do", "switch", "case", "default", "catch", "try", "finally", "return",
    "new", "int", "long", "double", "boolean", "void", "class", "public", "private", "static",
    "final", "throw", "throws", "else", "break", "continue", "this", "super", "synchronized",
    "String", "true", "false", "null",
}
DECISIONS = {"if", "for", "while", "catch", "case", "?", "&&", "||"}


def tokens(src):
    return [t for t in TOKEN.findall(src) if not t.startswith(("//", "/*"))]


def loc(src):
    return sum(1 for line in src.split("\n") if line.strip())


def closes_into_body(toks, open_paren):
    depth, j = 0, open_paren
    while j < len(toks):
        depth += toks[j] == "("
        depth -= toks[j] == ")"
        if depth == 0:
            break
        j += 1
    return j + 1 < len(toks) and toks[j + 1] in ("{", "throws")


def callable_headers(toks):
    """Identifier + balanced (...) + `{` or `throws`, not preceded by new/./keyword."""
    count = 0
    for i, t in enumerate(toks):
        if not re.match(r"[A-Za-z_]\w*$", t) or t in KEYWORDS or i + 1 >= len(toks) or toks[i + 1] != "(":
            continue
        prev = toks[i - 1] if i else ""
        if prev in ("new", ".", "=", "(", ",", "return", "!", "&&", "||", "?", ":", "+", "-", "*", "<", ">") or prev == "":
            continue
        if closes_into_body(toks, i + 1):
            count += 1
    return count


def cc_oracle(src):
    toks = tokens(src)
    decisions = sum(1 for t in toks if t in DECISIONS)
    return max(callable_headers(toks), 1) + decisions


def fout_tokens(src):
    toks = tokens(src)
    calls = 0
    for i, t in enumerate(toks):
        if re.match(r"[A-Za-z_]\w*$", t) and t not in KEYWORDS and i + 1 < len(toks) and toks[i + 1] == "(":
            prev = toks[i - 1] if i else ""
            if prev == "new":
                continue
            # skip declaration headers: a type name precedes the identifier
            if re.match(r"[A-Za-z_]\w*$", prev) and prev not in ("return", "throw", "else"):
                continue
            if prev == ">" or closes_into_body(toks, i + 1):
                continue
            calls += 1
    return calls


def fout_tree(src):
    from codebleu.utils import get_tree_sitter_language
    from tree_sitter import Parser

    parser = Parser(get_tree_sitter_language("java"))
    tree = parser.parse(src.encode())
    if tree.root_node.has_error:
        tree = parser.parse(("class __W__ {\n" + src + "\n}\n").encode())
    count, stack = 0, [tree.root_node]
    while stack:
        n = stack.pop()
        count += n.type == "method_invocation"
        stack.extend(n.children)
    return count


class Gen:
    def __init__(self, seed):
        self.r = random.Random(seed)
        self.vars = ["a", "b", "n", "total"]

    def var(self):
        return self.r.choice(self.vars)

    def call(self, depth=0):
        name = self.r.choice(["compute", "size", "next", "check", "log", "apply"])
        recv = self.r.choice(["", "", "helper.", "this.", "items."])
        args = [self.expr(depth + 1) for _ in range(self.r.randint(0, 2))]
        return f"{recv}{name}({', '.join(args)})"

    def expr(self, depth=0):
        opts = ["var", "lit", "bin"]
        if depth < 2:
            opts += ["call", "new", "ternary"]
        k = self.r.choice(opts)
        if k == "var":
            return self.var()
        if k == "lit":
            return self.r.choice(["0", "1", "42", '"if (x && y) { ok(); }"', "'?'"])
        if k == "bin":
            return f"{self.var()} {self.r.choice(['+', '-', '*'])} {self.r.choice(['1', self.var()])}"
        if k == "call":
            return self.call(depth)
        if k == "new":
            return f"new Box({self.expr(depth + 1)})"
        return f"{self.cond(depth + 1)} ? {self.expr(depth + 1)} : {self.expr(depth + 1)}"

    def cond(self, depth=0):
        base = [f"{self.var()} > {self.r.randint(0, 9)}", f"{self.var()} == {self.var()}", "done"]
        if depth < 2:
            base.append(self.call(depth + 1))
        c = self.r.choice(base)
        for _ in range(self.r.choice([0, 0, 1, 2])):
            c = f"{c} {self.r.choice(['&&', '||'])} {self.r.choice(base)}"
        return c

    def block(self, indent, depth):
        body = [self.stmt(indent + 1, depth + 1) for _ in range(self.r.randint(1, 3))]
        pad = "    " * indent
        return "{\n" + "\n".join(body) + "\n" + pad + "}"

    def stmt(self, indent, depth):
        pad = "    " * indent
        kinds = ["assign", "call", "local", "comment"]
        if depth < 3:
            kinds += ["if", "ifelse", "while", "for", "foreach", "do", "switch", "try", "lambda"]
        k = self.r.choice(kinds)
        if k == "assign":
            return f"{pad}{self.var()} = {self.expr()};"
        if k == "call":
            return f"{pad}{self.call()};"
        if k == "local":
            v = f"v{self.r.randint(0, 99)}"
            return f"{pad}int {v} = {self.expr()};"
        if k == "comment":
            return f"{pad}// if (a || b) while (c) call();"
        if k == "if":
            return f"{pad}if ({self.cond()}) {self.block(indent, depth)}"
        if k == "ifelse":
            return f"{pad}if ({self.cond()}) {self.block(indent, depth)} else if ({self.cond()}) {self.block(indent, depth)} else {self.block(indent, depth)}"
        if k == "while":
            return f"{pad}while ({self.cond()}) {self.block(indent, depth)}"
        if k == "for":
            return f"{pad}for (int i = 0; i < {self.var()}; i++) {self.block(indent, depth)}"
        if k == "foreach":
            return f"{pad}for (Item it : items) {self.block(indent, depth)}"
        if k == "do":
            return f"{pad}do {self.block(indent, depth)} while ({self.cond()});"
        if k == "switch":
            cases = []
            for c in range(self.r.randint(1, 3)):
                cases.append(f"{pad}    case {c}:\n{self.stmt(indent + 2, depth + 1)}\n{pad}        break;")
            cases.append(f"{pad}    default:\n{pad}        {self.call()};")
            return f"{pad}switch ({self.var()}) {{\n" + "\n".join(cases) + f"\n{pad}}}"
        if k == "try":
            catches = "".join(f" catch ({e} e) {self.block(indent, depth)}" for e in self.r.sample(["IOException", "RuntimeException", "Exception"], self.r.randint(1, 2)))
            return f"{pad}try {self.block(indent, depth)}{catches}"
        return f"{pad}Runnable r{self.r.randint(0, 9)} = () -> {self.block(indent, depth)};"

    def method(self, indent, name):
        pad = "    " * indent
        ret = self.r.choice(["void", "int"])
        tail = f"\n{pad}    return {self.expr()};" if ret == "int" else ""
        body = "\n".join(self.stmt(indent + 1, 0) for _ in range(self.r.randint(1, 4)))
        mods = self.r.choice(["public ", "private ", "", "static "])
        return f"{pad}{mods}{ret} {name}(int a, int b) {{\n{body}{tail}\n{pad}}}"

    def fragment(self, shape):
        if shape == "method":
            return self.method(0, "run")
        if shape == "statements":
            return "\n".join(self.stmt(0, 0) for _ in range(self.r.randint(2, 4)))
        methods = [self.method(1, f"m{i}") for i in range(self.r.randint(1, 3))]
        ctor = "    Sample(int a) {\n        this.total = a > 0 ? a : compute(a);\n    }\n\n" if self.r.random() < 0.5 else ""
        return "class Sample {\n    int total;\n\n" + ctor + "\n\n".join(methods) + "\n}\n"


def main():
    out = sys.argv[1]
    os.makedirs(out, exist_ok=True)
    shapes = ["method"] * 10 + ["class"] * 10 + ["statements"] * 5
    records = []
    for i, shape in enumerate(shapes):
        src = Gen(1000 + i).fragment(shape)
        name = f"fixture_{i:02}.java"
        with open(os.path.join(out, name), "w") as f:
            f.write(src)
        ft, fr = fout_tokens(src), fout_tree(src)
        assert ft == fr, (name, ft, fr)
        records.append({"file": name, "shape": shape, "loc": loc(src), "cc": cc_oracle(src), "fout": ft})
    with open(os.path.join(out, "expected.json"), "w") as f:
        json.dump(records, f, indent=1)
        f.write("\n")


if __name__ == "__main__":
    main()
