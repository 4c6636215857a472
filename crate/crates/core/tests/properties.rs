use std::sync::OnceLock;

use precolor_core::coloring_flow::{
    brute_force_extend, coloring_from_orientation, orient_dual, Coloring,
};
use precolor_core::extension_solver::{decide_extension, Verdict};
use precolor_core::generator::{canonical_code, canonicalize, enumerate_fillings, GenSpec};
use precolor_core::plane_graph::{parse_plane_graph, PlaneGraph};
use proptest::prelude::*;

fn corpus() -> &'static [PlaneGraph] {
    static CORPUS: OnceLock<Vec<PlaneGraph>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (4..=8)
            .flat_map(|k| enumerate_fillings(&GenSpec::new(k, 3, 4).unwrap()))
            .collect()
    })
}

fn graph() -> impl Strategy<Value = PlaneGraph> {
    (0..corpus().len()).prop_map(|i| corpus()[i].clone())
}

/// Any proper coloring of the outer cycle, not only canonical ones.
fn graph_and_precoloring() -> impl Strategy<Value = (PlaneGraph, Coloring)> {
    graph().prop_flat_map(|g| {
        let k = g.outer_cycle().len();
        (Just(g), prop::collection::vec(1u8..=2, k), 1u8..=3).prop_filter_map(
            "closing edge clash",
            |(g, steps, first)| {
                let mut colors = vec![first];
                for s in &steps[..steps.len() - 1] {
                    let last = *colors.last().unwrap();
                    colors.push((last - 1 + s) % 3 + 1);
                }
                let psi = Coloring::from_outer(&g, &colors).ok()?;
                Some((g, psi))
            },
        )
    })
}

/// The same embedding with vertices renamed by `perm` and the outer cycle
/// started at `shift`.
fn relabel(g: &PlaneGraph, perm: &[usize], shift: usize) -> PlaneGraph {
    let n = g.vertex_count();
    let mut rotation = vec![Vec::new(); n];
    for v in 0..n {
        rotation[perm[v]] = g.rotation(v).iter().map(|&u| perm[u]).collect();
    }
    let outer = g.outer_cycle();
    let k = outer.len();
    let outer = (0..k).map(|i| perm[outer[(i + shift) % k]]).collect();
    PlaneGraph::new(rotation, outer).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn text_round_trip(g in graph()) {
        let h = parse_plane_graph(&g.to_text()).unwrap();
        prop_assert_eq!(h.rotations(), g.rotations());
        prop_assert_eq!(h.outer_cycle(), g.outer_cycle());
    }

    #[test]
    fn euler_formula(g in graph()) {
        let (v, e, f) = (g.vertex_count() as i64, g.edge_count() as i64, g.face_count() as i64);
        prop_assert_eq!(v - e + f, 2);
        let total: usize = (0..g.face_count()).map(|f| g.face_len(precolor_core::plane_graph::FaceId(f))).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    #[test]
    fn canonical_code_ignores_labels(g in graph(), seed in any::<u64>(), shift in 0usize..8) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &perm, shift % g.outer_cycle().len());
        prop_assert_eq!(
            canonical_code(g.rotations(), g.outer_cycle()),
            canonical_code(h.rotations(), h.outer_cycle())
        );
        let (code, c) = canonicalize(&h);
        prop_assert_eq!(canonical_code(c.rotations(), c.outer_cycle()), code);
    }

    #[test]
    fn solver_matches_oracle_on_any_precoloring((g, psi) in graph_and_precoloring()) {
        let verdict = decide_extension(&g, &psi);
        prop_assert_eq!(verdict.extends(), brute_force_extend(&g, &psi).is_some());
        if let Verdict::Extends { witness, .. } = &verdict {
            prop_assert!(witness.is_proper(&g));
            for &v in g.outer_cycle() {
                prop_assert_eq!(witness.get(v), psi.get(v));
            }
        }
    }

    #[test]
    fn extendability_survives_color_permutation((g, psi) in graph_and_precoloring()) {
        let swapped = psi.inverted();
        prop_assert_eq!(
            decide_extension(&g, &psi).extends(),
            decide_extension(&g, &swapped).extends()
        );
    }

    #[test]
    fn orientation_round_trip((g, psi) in graph_and_precoloring()) {
        if let Some(phi) = brute_force_extend(&g, &psi) {
            let o = orient_dual(&g, &phi);
            prop_assert!(o.violation(&g).is_none());
            let seed = g.outer_cycle()[0];
            prop_assert_eq!(coloring_from_orientation(&g, &o, (seed, phi.color(seed))).unwrap(), phi);
        }
    }
}
