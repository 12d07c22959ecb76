"""Checking dissection identities coefficientwise, and scanning congruences.

Run:  python demos/verify_identities.py
"""

from qeta import IdentityCheck, check_congruence_progression, check_identity, parse

# A 2-dissection lemma: the odd/even halves of f3/f1 as level-48 quotients.
lemma = IdentityCheck(
    name="f3-over-f1-dissection",
    lhs=parse("f3/f1"),
    rhs=parse("f4*f6*f16*f24^2/(f2^2*f8*f12*f48) + q*f6*f8^2*f48/(f2^2*f16*f24)"),
    order=400,
)
print(check_identity(lemma).record())

# The simplified closed form for the a(4n+2) subsequence.  The extract node
# makes the harness expand the base series to order 4*300+2 automatically.
simplified = IdentityCheck(
    name="a4n2-closed-form",
    lhs=parse("extract(f3/(f1*f6), 4, 2)"),
    rhs=parse("2*f2*f6^2*f8^2/(f1^4*f3*f12)"),
    order=300,
)
print(check_identity(simplified).record())

# A deliberately false claim: the report pinpoints the first bad coefficient.
bogus = IdentityCheck("f1-equals-f2", parse("f1"), parse("f2"), order=10)
print(check_identity(bogus).record())

# Scan all residues of a(mn+j) mod 2 for m = 4: only j = 2 and j = 3 survive.
print("\nresidue scan of a(4n+j) mod 2, n up to 500:")
for j in range(4):
    report = check_congruence_progression(
        parse("f3/(f1*f6)"), 4, j, 2, 2000, name=f"a(4n+{j})"
    )
    witness = "" if report.passed else f"  first odd value at n = {report.first_mismatch[0]}"
    print(f"  j={j}: {report.verdict.value}{witness}")
