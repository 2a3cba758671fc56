from flipgraph.analysis import (
    ConnectivityResult,
    DiameterResult,
    bfs_distances,
    degree_histogram,
    degrees,
    diameter,
    eccentricity,
    max_degree,
    min_degree,
    radius_sample,
    random_walk,
    shortest_flip_path,
    vertex_connectivity,
)
from flipgraph.engine import FlipGraph, explore
from flipgraph.export import to_dot, to_json, to_json_dict
from flipgraph.families import signotope_graph
