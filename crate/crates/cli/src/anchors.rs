/// Statement anchors, matched by longest check-id prefix.
const ANCHORS: &[(&str, &str)] = &[
    ("cdc.d_stable", "D(Cl) is a G-submodule"),
    ("delta1.generic_agreement", "delta_1 via auxiliary coefficients equals the connecting map of Ker s -> R -> Cl"),
    ("delta1.representative_invariance", "delta_1 is well defined on H^-1(G, Cl)"),
    ("delta_minus2.agreement", "connecting map H^-2(G, X) -> H^-1(G, Cl) sends [tau] (x) (p(L) - p0(L)) to c_p(tau)"),
    ("fixture.class", "cocycle tau(a)/a is a coboundary iff a in O^x K^x iff the class lies in C-bar"),
    ("fixture.injective_hom", "H^-1(G, Cl)/C-bar embeds in H^1(G, U)"),
    ("fixture.order_match", "H^-1(G, Cl)/C-bar is isomorphic to H^1(G, U)"),
    ("homology.gens_iso", "Ker(sum of G_p^ab -> G^ab) is isomorphic to H^-2(G, X)"),
    ("homology.h_minus1_x_zero", "H^-1(G, X) = 0"),
    ("nabla.class_matches_g", "extension class of 0 -> Cl -> nabla -> X -> 0 is the class of g"),
    ("nabla.exact", "0 -> Cl -> nabla -> X -> 0 is exact"),
    ("norm.a_f_surjects", "F surjects onto H^-1(G, Cl)"),
    ("norm.b_ker_nm_bar_is_cbar", "0 -> C-bar -> H^-1(G, Cl) -> Cl_S(K) is exact"),
    ("norm.c_ker_nm_is_d_plus_c", "0 -> D + C -> Cl_S(L) -> Cl_S(K) -> 0 is exact"),
    ("norm.c_nm_surjective", "Nm : Cl_S(L) -> Cl_S(K) is surjective"),
    ("norm.d_same_kernels", "F -> H^-1/C-bar and F -> Cl_S(K) have the same kernel"),
    ("norm.e_exact_sequence", "0 -> D -> Ker Nm -> C-bar -> 0 is exact"),
    ("norm.inclusions", "D <= Ker Nm <= Ker N"),
    ("pipeline.error", "pipeline completes on a valid instance"),
    ("script_h.action_well_defined", "G acts on H through any lift to G^S"),
    ("script_h.embedding_equivariant", "Gal(L_S/L) -> H is G-equivariant"),
    ("script_h.embedding_injective", "Gal(L_S/L) -> H, sigma -> class of sigma - 1, is injective"),
    ("snake.q_frobenius", "s_q(1) is the class of the distinguished prime above q"),
    ("snake.r_closed_form", "s(r_{sigma,tau}) = tau h c_p(h), h = tau^-1 sigma rho_p(sigma^-1 tau)"),
    ("snake.r_literal_mod_d", "s(r_{sigma,tau}) = tau c_p(h) modulo D(Cl)"),
    ("validate.", "instance axioms"),
    ("wrb.equivariant", "W, R, B maps are G-equivariant"),
    ("wrb.exact", "0 -> R -> B -> X -> 0 is exact"),
];

/// The anchor string of a check id.
pub fn anchor(id: &str) -> &'static str {
    ANCHORS
        .iter()
        .filter(|(p, _)| id.starts_with(p))
        .max_by_key(|(p, _)| p.len())
        .map(|(_, a)| *a)
        .unwrap_or("unanchored")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prefixes_are_unique() {
        let mut ids: Vec<&str> = ANCHORS.iter().map(|(p, _)| *p).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), ANCHORS.len());
    }

    #[test]
    fn longest_prefix_wins() {
        assert_eq!(anchor("fixture.class3.biconditional"), ANCHORS[4].1);
        assert_eq!(anchor("validate.NotAGroup"), "instance axioms");
        assert_eq!(anchor("nope"), "unanchored");
    }
}
