"""Complete two legs to Pythagorean quadruples (a, b, c, d)."""

from pytuple import all_completions, feasibility, predict_primitive_deltas_tuple

for legs in ([12, 15], [210, 135], [6, 30], [14, 98], [3, 5]):
    report = feasibility(legs)
    print(f"legs {legs}: k = {report.k}", "" if report.feasible else f"-> none ({report.reason.value})")
    for s in all_completions(legs):
        print(f"  delta={s.delta:>4}  {s.as_tuple()}  {s.kind.value}")
    print(f"  primitive gaps predicted from k alone: {sorted(predict_primitive_deltas_tuple(legs))}")
