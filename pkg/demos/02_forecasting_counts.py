"""Count primitive and non-primitive triples from the factorization alone."""

from pytuple import factorize, forecast_counts

for a in (15, 60, 99, 792, 3528, 5400, 720720):
    f = forecast_counts(a)
    print(f"a = {a:>6} = {factorize(a)!s:<28} total {f.total:>5}  "
          f"primitive {f.primitive:>3}  gaps {sorted(f.primitive_deltas)}")
