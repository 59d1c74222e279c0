"""Greedy dense subgraphs in G(n, 1/2): the partitioned greedy algorithm, its analytical
predictions, exact desk-scale oracles and a seeded experiment harness."""
