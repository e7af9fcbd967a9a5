"""Build a strong link over {e, f, g, h} with the OR and AND rules."""
from shannon_game.gallery import captured_by_links
from shannon_game.multilink import MultiLink, Strength, and_rule, or_rule, verify_link
from shannon_game.solver import is_captured

c = captured_by_links()
g = c.graph
names = {v: k for k, v in c.idx.items()}


def show(label, link):
    carrier = " ".join(names[v] for v in range(g.n) if link.carrier >> v & 1)
    ends = " ".join(names[v] for v in range(g.n) if link.terminals >> v & 1)
    print(f"{label:<26} {link.strength.name.lower():<6} carrier {{{carrier}}} "
          f"terminals {{{ends}}}  verified={verify_link(g, link)}")


left, right, f = c.set("L1 L2"), c.set("R1 R2"), c.set("f")
h_link = MultiLink(c.set("h"), left | f, Strength.WEAK, c.set("h"))
g_link = MultiLink(c.set("g"), left | f, Strength.WEAK, c.set("g"))
show("h (weak)", h_link)
show("g (weak)", g_link)
hg = or_rule([h_link, g_link])
show("OR(h, g)", hg)
fr = MultiLink(0, f | right, Strength.STRONG)
show("f to the right side", fr)
hgf = and_rule(hg, fr)
show("AND via pivot f", hgf)
e_link = MultiLink(c.set("e"), left | right, Strength.WEAK, c.set("e"))
final = or_rule([hgf, e_link])
show("OR(hgf, e)", final)
print("oracle: {e,f,g,h} captured =", is_captured(g, final.carrier))
