#!/usr/bin/env python3
"""Expand a JSON-LD document and print node statistics as a JSON line.

Prefers the pyld processor when it is installed. Otherwise a small built-in
expander is used; it implements the JSON-LD 1.1 expansion rules for the
subset these documents exercise (term-to-IRI context map, @type on node
objects, @id references, nested node objects, value arrays, null removal)
and raises on anything it cannot expand, so it still acts as an independent
check of the emitted documents.

Output: {"ok": bool, "engine": "pyld"|"builtin", "nodes": N, "typed_nodes": M}
Node objects are dicts that are neither literal wrappers ({"@value": ...})
nor bare node references ({"@id": ...}).
"""

import json
import sys


def _expand_builtin(doc):
    context = doc.get("@context")
    if not isinstance(context, dict):
        raise ValueError("@context must be a map")

    def term_iri(term):
        if term not in context:
            raise ValueError("term '%s' has no @context mapping" % term)
        iri = context[term]
        if not isinstance(iri, str) or not iri:
            raise ValueError("term '%s' maps to a non-IRI" % term)
        return iri

    def expand_value(value):
        if value is None:
            return None
        if isinstance(value, dict):
            if set(value) == {"@id"}:
                if not isinstance(value["@id"], str):
                    raise ValueError("@id must be a string")
                return {"@id": value["@id"]}
            return expand_node(value)
        if isinstance(value, list):
            out = []
            for item in value:
                expanded = expand_value(item)
                if expanded is None:
                    continue
                # expansion flattens nested arrays
                if isinstance(expanded, list):
                    out.extend(expanded)
                else:
                    out.append(expanded)
            return out
        if isinstance(value, (str, bool, int, float)):
            return {"@value": value}
        raise ValueError("unexpandable value of type %s" % type(value).__name__)

    def expand_node(node):
        out = {}
        for key, value in node.items():
            if key == "@context":
                continue
            if key == "@type":
                types = value if isinstance(value, list) else [value]
                for t in types:
                    if not isinstance(t, str):
                        raise ValueError("@type values must be strings")
                out["@type"] = list(types)
                continue
            if key.startswith("@"):
                raise ValueError("unsupported keyword '%s'" % key)
            iri = term_iri(key)
            expanded = expand_value(value)
            if expanded is None:
                continue  # null removes the property entirely
            out[iri] = expanded if isinstance(expanded, list) else [expanded]
        return out

    return [expand_node(doc)]


def _stats(expanded):
    nodes = 0
    typed = 0

    def walk(value):
        nonlocal nodes, typed
        if isinstance(value, list):
            for item in value:
                walk(item)
            return
        if not isinstance(value, dict):
            return
        keys = set(value)
        if keys in ({"@value"}, {"@value", "@type"}, {"@value", "@language"}):
            return  # literal wrapper
        if keys == {"@id"}:
            return  # node reference
        nodes += 1
        if "@type" in value:
            typed += 1
        for key, child in value.items():
            if key.startswith("@") and key not in ("@graph",):
                continue
            walk(child)

    walk(expanded)
    return nodes, typed


def main():
    if len(sys.argv) != 2:
        raise ValueError("usage: jsonld_expand.py <document.jsonld>")
    with open(sys.argv[1], "rb") as handle:
        doc = json.load(handle)

    try:
        from pyld import jsonld as pyld_jsonld
    except ImportError:
        expanded = _expand_builtin(doc)
        engine = "builtin"
    else:
        expanded = pyld_jsonld.expand(doc)
        engine = "pyld"

    nodes, typed = _stats(expanded)
    print(json.dumps({"ok": True, "engine": engine, "nodes": nodes,
                      "typed_nodes": typed}))


if __name__ == "__main__":
    try:
        main()
    except Exception as exc:  # report structured failure for the test harness
        print(json.dumps({"ok": False, "error": str(exc)}))
        sys.exit(1)
