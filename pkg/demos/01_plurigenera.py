"""From a basket and one plurigenus to the whole P_m table."""

from fractions import Fraction

from threefold_bounds import ThreefoldData, cartier_index, delta_index, parse_basket, plurigenus_table, solve_k3
from threefold_bounds.basket import local_contribution

print("== 1. PLURIGENERA FROM A BASKET ==========================")

print("1. reading the basket...")
basket = parse_basket("4*(1,2) (4,9) (2,5) (5,13) 3*(1,3) 2*(1,4)")
print("   points:", len(basket), " Cartier index:", cartier_index(basket))

print("2. one local term by hand...")
for point in sorted(set(basket.points()), key=lambda p: (p.r, p.b)):
    print(f"   l({point.b},{point.r}; m=4) = {local_contribution(point, 4)}")

print("3. solving K^3 from chi = 2 and P_2 = 0...")
data = ThreefoldData(chi=2, basket=basket, known_plurigenera=((2, 0),), q=0, pg=0)
k3 = solve_k3(data)
print("   K^3 =", k3)
assert k3 == Fraction(1, 1170)

print("4. the first few dozen plurigenera...")
data = data.with_k3(k3)
rows = plurigenus_table(data, 40)
print("   " + " ".join(f"P{m}={p}" for m, p in rows if p))

print("5. the first m with at least two sections...")
print("   delta =", delta_index(data))
