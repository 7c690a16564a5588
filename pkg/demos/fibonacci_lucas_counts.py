# Fence and crown filter lattices against the Fibonacci and Lucas numbers,
# plus the deletion identity F_{m+n} = F_m F_{n+1} + F_{m-1} F_n realized
# as an actual lattice split.

from latcut import (crown, fence, fib, filter_lattice, lucas,
                    verify_fibonacci_decomposition,
                    verify_lucas_decomposition, cover_cube, fibonacci_cube,
                    graph_isomorphic)

print("fence n -> |F(fence)| vs F_{n+2}")
for n in range(11):
    size = filter_lattice(fence(n)).size
    print("  n=%2d  %5d  %5d" % (n, size, fib(n + 2)))

print("crown 2n -> |F(crown)| vs L_{2n}")
for two_n in (4, 6, 8, 10):
    size = filter_lattice(crown(two_n)).size
    print("  2n=%2d  %5d  %5d" % (two_n, size, lucas(two_n)))

# split the fence on 9 elements at position 4 (so m=7, n=4)
rep = verify_fibonacci_decomposition(7, 4)
print("\nfence split m=7 n=4:")
print("  lattice size", rep.lattice_size, "= F_11 =", fib(11))
print("  F_7*F_5 + F_6*F_4 =", fib(7) * fib(5) + fib(6) * fib(4))
print("  all checks pass:", rep.ok)

rep = verify_lucas_decomposition(4)
print("crown split 2n=8:")
print("  lattice size", rep.lattice_size, "= L_8 =", lucas(8))
print("  all checks pass:", rep.ok)

# covering graph of F(fence(6)) really is the Fibonacci cube of dimension 6
g = cover_cube(filter_lattice(fence(6)))
print("\ncover graph of F(fence(6)): %d vertices %d edges, isomorphic to "
      "the string model: %s" % (g.vertex_count, g.edge_count,
                                graph_isomorphic(g, fibonacci_cube(6))))
