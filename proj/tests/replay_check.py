#!/usr/bin/env python3
"""Replays certificate files with a separate, minimal implementation of the
three rewrite rules. Exits nonzero if any certificate fails to reach its
final monomial. Shares no code with the C++ library."""

import argparse
import json
import re
import sys


def parse(text):
    toks = re.findall(r"\(|\)|[A-Za-z_][A-Za-z0-9_']*", text)
    pos = 0

    def expr():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        if tok != "(":
            return tok
        left = expr()
        op = toks[pos]
        pos += 1
        right = expr()
        if toks[pos] != ")":
            raise ValueError(f"expected ')' in {text!r}")
        pos += 1
        return (op, left, right)

    tree = expr()
    if pos != len(toks):
        raise ValueError(f"trailing input in {text!r}")
    return tree


def subtree(t, path):
    for c in path:
        t = t[1] if c == "0" else t[2]
    return t


def replace(t, path, u):
    if not path:
        return u
    if path[0] == "0":
        return (t[0], replace(t[1], path[1:], u), t[2])
    return (t[0], t[1], replace(t[2], path[1:], u))


def is_node(x, op):
    return isinstance(x, tuple) and x[0] == op


def rewrite(x, rule, direction):
    if rule in ("assoc_h", "assoc_v"):
        o = rule[-1]
        if direction == "forward":
            if not (is_node(x, o) and is_node(x[1], o)):
                raise ValueError("associativity pattern does not match")
            _, (_, p, q), r = x
            return (o, p, (o, q, r))
        if not (is_node(x, o) and is_node(x[2], o)):
            raise ValueError("associativity pattern does not match")
        _, p, (_, q, r) = x
        return (o, (o, p, q), r)
    outer, inner = ("v", "h") if direction == "forward" else ("h", "v")
    if not (is_node(x, outer) and is_node(x[1], inner) and is_node(x[2], inner)):
        raise ValueError("interchange pattern does not match")
    _, (_, p, q), (_, r, s) = x
    return (inner, (outer, p, r), (outer, q, s))


def replay(cert):
    t = parse(cert["initial"])
    for k, step in enumerate(cert["steps"], 1):
        try:
            here = subtree(t, step["position"])
            t = replace(t, step["position"], rewrite(here, step["rule"], step["direction"]))
        except (ValueError, IndexError, TypeError) as e:
            return False, f"step {k}: {e}"
    return t == parse(cert["final"]), "reaches final" if t == parse(cert["final"]) else "ends elsewhere"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("files", nargs="+")
    args = ap.parse_args()
    ok = True
    for fn in args.files:
        with open(fn) as f:
            cert = json.load(f)
        good, why = replay(cert)
        ok = ok and good
        print(f"{'PASS' if good else 'FAIL'}  {fn}: {len(cert['steps'])} steps, {why}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
