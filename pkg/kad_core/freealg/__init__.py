from .freealg import Antichain, parse_antichain, maximal, in_downset, single_interp, realize, star_iter, \
    interp_star_free, interp_bounded, decide_cd1, decide_star_free, discriminating_tree, member_down, meet_trees, \
    meet_finite
