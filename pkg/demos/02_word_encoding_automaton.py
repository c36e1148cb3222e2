"""From partitions to words, and from a forbidden-word list to q-series.

Partitions are chopped into blocks of magnitudes (3k-3, 3k]; each block
is one of 13 letters.  Membership in the D1-D3 class is then factor
avoidance for a 48-word list, whose minimal DFA has six states.  The
non-accepting states carry a coupled system of q-difference equations
whose solution components are exactly the class generating functions.
"""

from qpart.automata import (
    FORBIDDEN_WORDS,
    build_avoidance_dfa,
    decode,
    derive_transfer_system,
    encode,
    solve_language_series,
)
from qpart.colored import COND_D123, COND_D1234, enumerate_2colored, gen_fun

print("block images: word 'maei' decodes to", decode("maei"))
print("encode (4, 2):", encode(((4, "+"), (2, "+"))))
print("forbidden words:", len(FORBIDDEN_WORDS), "- first few:", FORBIDDEN_WORDS[:6])

dfa = build_avoidance_dfa()
print(f"\nminimal DFA: {dfa.n_states} states, accepting {sorted(dfa.accepts)}")
for s in range(dfa.n_states):
    print(f"  state {s}:", dfa.delta[s])

system = derive_transfer_system(dfa)
print("\ncoupled system over non-accepting states", system.states)
print("matrix entry (0,0):", system.matrix[0][0])

N = 16
sols = solve_language_series(system, N)
print("\nsolving by q-adic iteration and comparing with direct enumeration:")
print("  component 0 = D1-D3 series:",
      sols[0] == gen_fun(enumerate_2colored(N - 1, COND_D123), N))
print("  component 1 = D1-D4 series:",
      sols[1] == gen_fun(enumerate_2colored(N - 1, COND_D1234), N))
