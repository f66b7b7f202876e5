from .relstruct import RelStruct, StructPath, Refutation, EvalRelation, UnknownLabelError, StructSyntaxError, \
    MAX_REFUTE_BITS, evaluate, evaluate_batch, relation_matrix, satisfies, reflexive_transitive_closure, \
    tree_to_struct, tree_path, hom_into, refute, structure_at, render_struct, parse_struct
