"""
The expression language
=======================

Expressions are parsed, pretty-printed and evaluated to lazy matrices.
The ``conesigma eval`` command renders the same windows from the shell.
"""

from conesigma.dsl import evaluate, parse_expr, pretty, render_window

src = "(I + alpha)*T(alpha) + {(0,1):1/2}"
node = parse_expr(src)
print(node)
print(pretty(node))

A = evaluate(node)
print("entry (0,1):", A.entry(0, 1))

print(render_window("alpha * T(alpha)", 4), end="")
print(render_window("Ibar(2)", 4, "csv"), end="")

# errors point at the offending spot
try:
    parse_expr("phi(alpha")
except Exception as exc:
    print(type(exc).__name__, exc)
