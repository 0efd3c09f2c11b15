# Writes fixtures/dh_obstructions.json from hand-transcribed edge lists.
# networkx computes graph6 and degree sequences, independently of the C++ code.
# Refresh fixtures/SHA256SUMS after running.
import json
import os

import networkx as nx

K = lambda *e: {"bag": "K", "edges": list(e)}
S = lambda *e: {"bag": "S", "edges": list(e)}
beta1 = [(1,2),(2,3),(3,5),(5,6),(2,4),(4,5)]
beta2 = beta1 + [(1,3),(1,4)]
beta3 = beta2 + [(3,6),(4,6)]
gamma1 = [(1,2),(2,3),(1,4),(4,5),(1,6),(6,7)]
gamma2 = gamma1 + [(1,3)]
gamma3 = gamma2 + [(1,5)]
net = [(1,3),(3,4),(4,1),(1,2),(3,5),(4,6)]
entries = [
 ("net", range(1,7), net, K("KS_p","KS_p","KS_p"), "three-obstruction drawing, left", "v2 on top of triangle v1 v3 v4; v5, v6 hang below-left and below-right"),
 ("c4_two_pendants", range(1,7), beta1, None, "three-obstruction drawing, middle", "diamond v2 v3 v5 v4 laid on its side; v1 left of v2, v6 right of v5"),
 ("c5", range(1,6), [(1,2),(2,3),(3,4),(4,5),(5,1)], None, "three-obstruction drawing, right", "pentagon v1..v5 clockwise from the top"),
 ("alpha1", range(1,7), net, K("KS_p","KS_p","KS_p"), "DH obstruction drawing, alpha1", "same layout as the net"),
 ("alpha2", range(1,7), beta1 + [(2,5)], K("KS_c","KS_p","KS_p"), "DH obstruction drawing, alpha2", "diamond v2 v3 v5 v4 with horizontal chord v2 v5; pendants v1, v6"),
 ("alpha3", range(2,8), [(2,3),(3,5),(5,4),(4,2),(6,2),(6,3),(6,4),(6,5),(6,7)], K("KS_c","KS_c","KS_p"), "DH obstruction drawing, alpha3", "v2..v5 around hub v6 at the centre; v7 just above-left of the hub. The drawn strokes leave the graph disconnected; the hub spokes follow its bag-type row"),
 ("alpha4", range(2,8), [(2,4),(4,5),(5,3),(3,2)] + [(h,v) for h in (6,7) for v in (2,3,4,5)], K("KS_c","KS_c","KS_c"), "DH obstruction drawing, alpha4", "four-cycle v2 v4 v5 v3; v6 above and v7 below, both joined to all four"),
 ("beta1", range(1,7), beta1, S("S_cS_c","S_pS_p","S_pS_p"), "DH obstruction drawing, beta1", "diamond layout of the middle three-obstruction graph"),
 ("beta2", range(1,7), beta2, S("S_cS_c","S_pS_p","S_pK"), "DH obstruction drawing, beta2", "beta1 plus v1 joined to v3 and v4"),
 ("beta3", range(1,7), beta3, S("S_cS_c","S_pK","S_pK"), "DH obstruction drawing, beta3", "beta2 plus v6 joined to v3 and v4"),
 ("beta4", range(1,7), beta1 + [(3,4)], S("S_cK","S_pS_p","S_pS_p"), "DH obstruction drawing, beta4", "beta1 plus vertical chord v3 v4"),
 ("beta5", range(1,7), beta2 + [(3,4)], S("S_cK","S_pS_p","S_pK"), "DH obstruction drawing, beta5", "beta2 plus vertical chord v3 v4"),
 ("beta6", range(1,7), beta3 + [(3,4)], S("S_cK","S_pK","S_pK"), "DH obstruction drawing, beta6", "beta3 plus vertical chord v3 v4"),
 ("gamma1", range(1,8), gamma1, S("S_pS_p","S_pS_p","S_pS_p"), "DH obstruction drawing, gamma1", "centre v1; legs v2-v3 up-left, v4-v5 up-right, v6-v7 down"),
 ("gamma2", range(1,8), gamma2, S("S_pK","S_pS_p","S_pS_p"), "DH obstruction drawing, gamma2", "gamma1 plus v1 v3"),
 ("gamma3", range(1,8), gamma3, S("S_pK","S_pK","S_pS_p"), "DH obstruction drawing, gamma3", "gamma2 plus v1 v5"),
 ("gamma4", range(1,8), gamma3 + [(1,7)], S("S_pK","S_pK","S_pK"), "DH obstruction drawing, gamma4", "gamma3 plus v1 v7"),
]
out = []
for name, vs, edges, row, fig, layout in entries:
    g = nx.Graph(); g.add_nodes_from(vs); g.add_edges_from(edges)
    rec = {"name": name,
           "source": {"figure": fig, "layout": layout},
           "adjacency": {str(v): sorted(g[v]) for v in sorted(g)},
           "degree_sequence": sorted((d for _, d in g.degree()), reverse=True),
           "graph6": nx.to_graph6_bytes(g, nodes=sorted(g), header=False).decode().strip()}
    if row: rec["row"] = row
    out.append(rec)
open(os.path.join(os.path.dirname(__file__), "..", "fixtures", "dh_obstructions.json"), "w").write(json.dumps({"graphs": out}, indent=1) + "\n")
