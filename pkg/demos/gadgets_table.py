"""Every registered figure gadget, contracted and compared with its closed form.

Run: python demos/gadgets_table.py
"""

from holant.gadgets import REGISTRY, verify_named_gadget

samples = {
    "join-a000b": dict(a=2, b=3), "fig2-H": dict(x=3), "fig2-H-bundled": dict(x=3), "fig3-H2i": dict(i=2),
    "fig4-chain": dict(a=2, steps=2), "fig-1010": dict(f=[1, 0, 1, 0, -1], pin=[1, 0]),
    "fig6-1a2b": dict(a=2, b=3), "fig7-g0": dict(v=2), "fig8-g1": dict(v=2),
    "lemma53-fan": dict(a=3, j=4), "binary-chain": dict(a=2, j=5),
}
for name in sorted(REGISTRY):
    got, want, ok = verify_named_gadget(name, **samples[name])
    print("%-15s %-5s %s   (%s)" % (name, "PASS" if ok else "FAIL", got, REGISTRY[name].note))
