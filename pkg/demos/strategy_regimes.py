"""Show how the preferred strategy flips as user n's deadline relaxes.

With d_m fixed, the winner is hybrid NOMA for d_n < 2 d_m (collapsing to
pure NOMA when the deadlines coincide, where OMA is outright infeasible) and
OMA from d_n = 2 d_m on, where the two curves touch exactly.
"""

import math

from noma_mec import select_strategy, validate_scenario


def describe(scenario):
    table = select_strategy(scenario)
    fmt = lambda e: f"{e:12.5f}" if math.isfinite(e) else f"{'inf':>12}"
    print(
        f"d_n = {scenario.d_n:5.1f}  regime = {table.regime.value:11}"
        f"  hybrid = {fmt(table.hybrid.energy)}"
        f"  pure = {fmt(table.pure_noma.energy)}"
        f"  oma = {fmt(table.oma.energy)}"
        f"  -> {table.selected.value}"
    )
    return table


def main():
    print("task size 15 nats, d_m = 20, unit gains\n")
    for d_n in (20.0, 22.0, 25.0, 30.0, 35.0, 39.9, 40.0, 45.0, 60.0, 100.0):
        describe(validate_scenario(nats=15, d_m=20, d_n=d_n))

    print("\nat the 2*d_m boundary the tie is exact:")
    table = describe(validate_scenario(nats=15, d_m=20, d_n=40.0))
    gap = table.hybrid.energy - table.oma.energy
    print(f"hybrid - oma = {gap:.3e}")

    print("\nwith equal deadlines, OMA has no slot at all:")
    table = describe(validate_scenario(nats=15, d_m=20, d_n=20.0))
    print(f"oma feasible: {table.oma.feasible}, energy: {table.oma.energy}")


if __name__ == "__main__":
    main()
