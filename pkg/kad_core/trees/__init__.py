from .tree import PointedTree, TreeVertex, TreeSyntaxError, canonical_key, trivial, edge, point_count, vertex_count, \
    edge_count, depth, preorder, subtree_at, point_path, leq, hom_search, reduce, is_reduced, concat, dom, \
    enumerate_exact, enumerate_trees, random_tree, render_tree, parse_tree, to_dot
