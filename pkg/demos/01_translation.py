"""Translating in both directions: indicator sets to profile sets and back.

The right polarity of an indicator set is the set of personality profiles
satisfying the conjunction of its members' translations; the left polarity
of a profile collection is the set of indicators whose translation every
profile satisfies.  Larger inputs on either side mean fewer survivors on
the other: both maps are antitone.
"""

import random

from mbti_szondi import (
    NORM_PROFILE,
    TypeIndicator,
    builtin_interpretation,
    left_polarity,
    parse_profile,
    render_indicator_set,
    right_polarity,
)

interp = builtin_interpretation()
PROFILE_SPACE = 12 ** 8

print("== indicator set -> profile set =================================")

print("1. single indicators...")
for name in ("ISTJ", "INFJ", "ENTP"):
    result = right_polarity(interp, [TypeIndicator[name]])
    share = result.count() / PROFILE_SPACE
    print(f"   {name}: {result.count():,} profiles ({share:.2%} of the space)")

print("2. the empty set translates to TRUE, so it keeps everything...")
everything = right_polarity(interp, [])
print(f"   {{}}: {everything.count():,} profiles")

print("3. adding indicators can only shrink the result...")
chain = [TypeIndicator.ISTJ, TypeIndicator.ISFJ, TypeIndicator.INFJ]
for size in range(1, len(chain) + 1):
    subset = chain[:size]
    result = right_polarity(interp, subset)
    print(f"   {render_indicator_set(frozenset(subset)):<16} {result.count():,}")

print("4. some pairs conflict outright...")
pair = [TypeIndicator.ISTJ, TypeIndicator.ESTP]
print(f"   ISTJ,ESTP: {right_polarity(interp, pair).count()} profiles")
print("   (their attitudes demand opposite hy families)")

print()
print("== profile -> indicator set =====================================")

print("5. a profile drawn from inside a polarity maps back to it...")
rng = random.Random(7)
(witness,) = right_polarity(interp, [TypeIndicator.INFJ]).sample(rng, 1)
back = left_polarity(interp, [witness])
print(f"   profile:    {witness}")
print(f"   indicators: {render_indicator_set(back)}")

print("6. the norm profile satisfies no translation at all...")
print(f"   profile:    {NORM_PROFILE}")
print(f"   indicators: {render_indicator_set(left_polarity(interp, [NORM_PROFILE]))}")

print("7. parsing accepts any factor order...")
scrambled = parse_profile("m+! d0 p+- k-!! hy- e+ s+!!! h0")
print(f"   parsed:     {scrambled}")
print(f"   indicators: {render_indicator_set(left_polarity(interp, [scrambled]))}")

print("8. asking about several profiles at once intersects their answers...")
profiles = right_polarity(interp, [TypeIndicator.ESTJ]).sample(rng, 3)
for p in profiles:
    print(f"   {p} -> {render_indicator_set(left_polarity(interp, [p]))}")
joint = left_polarity(interp, profiles)
print(f"   all three together -> {render_indicator_set(joint)}")
