"""Differential checks: gap enumeration against brute force and gcd truth."""

from pytuple import verify

print("triples vs brute-force scan, a <= 100:", len(verify.check_triples_oracle(100)), "discrepancies")
print("triple predictor vs gcd, a <= 2000:", len(verify.check_predictor(2000)), "discrepancies")
print("closed-form counts, a <= 2000:", len(verify.check_counts(2000)), "discrepancies")
print("Euclid coverage, m <= 50:", len(verify.check_euclid_coverage(50)), "discrepancies")
corpus = verify.tuple_corpus(200, 10**5)
print("tuple completions vs brute force:", len(verify.check_tuples_oracle(corpus, cap=10**5)), "discrepancies")
print("tuple predictor vs gcd:", len(verify.check_tuple_predictor(corpus)), "discrepancies")
