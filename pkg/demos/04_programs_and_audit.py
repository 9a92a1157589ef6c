"""The program language and the claim audit.

Sequence and enumeration values can be written as small closed programs;
totality is guaranteed by construction, so the diagonal operator is always
well defined.  The audit runs every cataloged claim at a chosen depth and
reports a three-valued verdict: a finite pass is never promoted to an
infinite conclusion.
"""

from enumerlab import prefix
from enumerlab.audit import reports_to_markdown, run_all
from enumerlab.dsl import ParseError, eval_enum, eval_seq, parse

program = "diagc(interleave(const(ones),figure5))"
print(f"Program: {program}")
seq = eval_seq(parse(program))
print(f"  denotes {prefix(seq, 24)} ...")

program = "insert(figure5,1,diagc(figure5))"
print(f"Program: {program}")
E = eval_enum(parse(program))
print(f"  row 1 = {prefix(E.row(1), 16)} ...  (the inserted complement)")

print()
print("Ill-typed programs are rejected with a position:")
try:
    parse("interleave(ones,zeros)")
except ParseError as exc:
    print(f"  {exc.line}:{exc.column}: {exc.message}")

print()
print("Claim audit at depth 12:")
print(reports_to_markdown(run_all(12)))
