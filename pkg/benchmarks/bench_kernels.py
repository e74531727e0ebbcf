"""Time the compiled and pure Python kernels on the same inputs.

    python3 benchmarks/bench_kernels.py [--length N] [--prefixes K] [--repeat R]

Prints the best-of-R wall time per backend and the speedup.  Outputs of the
two backends are compared before timing.
"""

import argparse
import timeit

from sturmian_apr import ContinuedFraction, FieldElement, kernels


def orbit_args(cf, rho, n):
    alpha = cf.value()
    return (rho.a * alpha.c, rho.b * alpha.c, alpha.a * rho.c, alpha.b * rho.c,
            alpha.c * rho.c, alpha.d, n)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--length", type=int, default=10 ** 5, help="orbit length to code")
    ap.add_argument("--prefixes", type=int, default=60, help="prefix lengths to scan")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the python backend is available")
    cf = ContinuedFraction.parse("[0;2,(1,3)]")
    rho = (3 * cf.value() + FieldElement.rational(1, 7)).frac()
    oargs = orbit_args(cf, rho, args.length)
    bits = backends["python"].orbit_bits(*oargs)

    for name, mod in backends.items():
        assert mod.orbit_bits(*oargs) == bits, name
        assert mod.scan_prefix(bits, 7) == backends["python"].scan_prefix(bits, 7), name

    jobs = {
        f"orbit_bits n={args.length}": lambda m: m.orbit_bits(*oargs),
        f"scan_prefix n=1..{args.prefixes}": lambda m: [m.scan_prefix(bits, n)
                                                        for n in range(1, args.prefixes + 1)],
    }
    print(f"{'kernel':<28}{'backend':<10}{'seconds':>10}")
    for label, job in jobs.items():
        times = {}
        for name, mod in backends.items():
            times[name] = min(timeit.repeat(lambda: job(mod), number=1, repeat=args.repeat))
            print(f"{label:<28}{name:<10}{times[name]:>10.4f}")
        if len(times) == 2:
            print(f"{'':<28}{'speedup':<10}{times['python'] / times['cython']:>9.1f}x")


if __name__ == "__main__":
    main()
