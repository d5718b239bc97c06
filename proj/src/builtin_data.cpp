// Built-in input tables for the decomposition-theorem runs in rank <= 4.
// Fiber tables list the cohomology of the contraction fiber over each
// Satake stratum as local systems on that stratum; betti tables are plain
// dimension rows; the gysin section is the compact-support page assembling
// the fiber over A_1 in rank 4 from its five boundary pieces.
//
// All of these are inputs imported from published computations, not results
// of this engine.  Entries marked derived= were inverted from the relations
// stated in their notes and should be cross-checked against the cited
// external sources when available.

namespace ihsat {

extern const char* const kBuiltinDatasets;

const char* const kBuiltinDatasets = R"DATA(
# ---- rank 2 ----

[fiber genus=2 stratum=1 note="Kummer curve of the universal elliptic curve, a P1 bundle fiber"]
0: Q
2: Q

[fiber genus=2 stratum=0 note="quotient of a nodal P1 by the involution, again a P1"]
0: Q
2: Q

[betti name=oab2 top=6 note="Betti numbers of the rank-2 toroidal compactification"]
0: 1
2: 2
4: 2
6: 1

# ---- rank 3 ----

[fiber genus=3 stratum=2 note="Kummer-invariant cohomology of the universal abelian surface"]
0: Q
2: Q + V[1,1]
4: Q

[fiber genus=3 stratum=1 note="fiber over A_1 in rank 3; the source display labels this column by the corank-1 fiber, but its degrees and use are those of the fiber over A_1, so it is stored under k=1"]
0: Q
2: Q
4: 2 Q
6: Q

[fiber genus=3 stratum=0 note="fiber over the deepest stratum in rank 3; vanishes in odd degrees"]
0: Q
2: Q
4: 2 Q
6: Q

[betti name=oab3 top=12 note="Betti numbers of the rank-3 toroidal compactification"]
0: 1
2: 2
4: 4
6: 6
8: 4
10: 2
12: 1

# ---- rank 4 ----

[fiber genus=4 stratum=3 note="Kummer-invariant cohomology of the universal abelian threefold"]
0: Q
2: Q + V[1,1]
4: Q + V[1,1]
6: Q

[fiber genus=4 stratum=2 note="fiber of the rank-4 Voronoi contraction over A_2"]
0: Q
2: Q
4: V[2,2] + V[1,1] + 2 Q
5: V[2]
6: V[2,2] + V[1,1] + 3 Q
8: V[1,1] + 2 Q
10: Q

[fiber genus=4 stratum=1 note="fiber of the rank-4 Voronoi contraction over A_1, assembled from the five-piece Gysin page; vanishes in odd degrees"]
0: Q
2: Q
4: V[2] + 2 Q
6: V[2] + 4 Q
8: 4 Q
10: 3 Q
12: Q

[fiber genus=4 stratum=0 note="fiber over the deepest stratum in rank 4: union of the exceptional divisor and the strict transform of the perfect-cone fiber; vanishes in odd degrees"]
0: Q
2: 2 Q
4: 3 Q
6: 7 Q
8: 7 Q
10: 6 Q
12: 4 Q
14: 2 Q
16: Q
18: Q

[betti name=vor4 top=20 note="Betti numbers of the rank-4 second Voronoi compactification; degree 10 is open, its value depends on the unknown Euler number of A_4"]
0: 1
2: 3
4: 5
6: 11
8: 17
10: ?
12: 17
14: 11
16: 5
18: 3
20: 1

[betti name=E top=18 derived=1 note="exceptional divisor of the blow-down to the perfect-cone space; derived: degrees >= 12 inverted from the blow-up relation against the Voronoi row, b_10 = 3 as quoted in the source computations, low degrees by Poincare duality of the smooth 9-fold; cross-check against the cited external source if available"]
0: 1
2: 1
4: 2
6: 3
8: 3
10: 3
12: 3
14: 2
16: 1
18: 1

# Compact-support cohomology of the five boundary pieces of the fiber over
# A_1 in rank 4, as local systems on A_1, with Tate twists.  The column= key
# gives the position of each piece in the gysin page below.

[fiber genus=4 stratum=1 piece=K4 column=0 dim=3 support=compact note="piece indexed by the rank-4 principal cone"]
0: Q(0)
2: Q(-1)
4: Q(-2)
6: Q(-3)

[fiber genus=4 stratum=1 piece=K4m1 column=1 dim=4 support=compact note="piece indexed by the codimension-one face of the rank-4 principal cone"]
4: Q(-2)
6: 2 Q(-3)
8: Q(-4)

[fiber genus=4 stratum=1 piece=K3p1 column=2 dim=5 support=compact note="piece indexed by the rank-3 principal cone plus a ray"]
4: V[2](0)
6: Q(-3)
7: V[2](-2)
8: 2 Q(-4)
10: Q(-5)

[fiber genus=4 stratum=1 piece=C4 column=2 dim=5 support=compact note="piece indexed by the 4-cycle cone"]
8: Q(-4)
10: Q(-5)

[fiber genus=4 stratum=1 piece=K3 column=3 dim=6 support=compact note="piece indexed by the rank-3 principal cone"]
6: V[2](-1)
8: V[2](-2)
10: Q(-5)
12: Q(-6)

[gysin genus=4 stratum=1 note="compact-support page for the five-piece stratification of the fiber over A_1; entry (p,q) sits in total degree p+q; the single forced differential is known to have full rank"]
(0,0): Q(0)
(0,2): Q(-1)
(0,4): Q(-2)
(0,6): Q(-3)
(1,3): Q(-2)
(1,5): 2 Q(-3)
(1,7): Q(-4)
(2,2): V[2](0)
(2,4): Q(-3)
(2,5): V[2](-2)
(2,6): 3 Q(-4)
(2,8): 2 Q(-5)
(3,3): V[2](-1)
(3,5): V[2](-2)
(3,7): Q(-5)
(3,9): Q(-6)
differential (2,5)->(3,5): V[2](-2)

# ---- base case ----

[betti name=sat1 top=2 note="the rank-1 Satake space is a smooth P1"]
0: 1
2: 1
)DATA";

}  // namespace ihsat
