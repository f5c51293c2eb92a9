//! Frozen invariant values of the generated spaces, cross-checked against the
//! unpruned oracles where those finish quickly.

use proptest::prelude::*;
use radon_lab::generators::{
    grid_box_space, interval_space, lattice_window_space, powerset_space, GridBoxSpec, LatticeWindowSpec,
};
use radon_lab::invariants::oracle::{
    naive_colorful_helly_number, naive_helly_number, naive_radon_number, naive_tverberg_number,
};
use radon_lab::invariants::{colorful_helly_number, helly_number, radon_number, tverberg_number, Pool};
use radon_lab::space::closure_from_generators;
use radon_lab::{par, Bound, Budget, ConvexitySpace, PointSet};

struct Frozen {
    name: &'static str,
    space: ConvexitySpace,
    radon: usize,
    helly: usize,
    tverberg3: usize,
    colorful: usize,
    /// Whether the naive oracles are fast enough to re-derive every value.
    oracle: bool,
}

fn frozen() -> Vec<Frozen> {
    let grid = |d: Vec<usize>| grid_box_space(&GridBoxSpec::new(d).unwrap()).unwrap();
    vec![
        Frozen { name: "interval6", space: interval_space(6).unwrap(), radon: 3, helly: 2, tverberg3: 5, colorful: 2, oracle: true },
        Frozen { name: "grid22", space: grid(vec![2, 2]), radon: 3, helly: 2, tverberg3: 5, colorful: 3, oracle: true },
        Frozen { name: "powerset3", space: powerset_space(3).unwrap(), radon: 4, helly: 3, tverberg3: 7, colorful: 3, oracle: true },
        Frozen { name: "grid44", space: grid(vec![4, 4]), radon: 4, helly: 2, tverberg3: 6, colorful: 3, oracle: false },
        Frozen {
            name: "lattice33",
            space: lattice_window_space(&LatticeWindowSpec::new(vec![3, 3]).unwrap()).unwrap(),
            radon: 5,
            helly: 4,
            tverberg3: 9,
            colorful: 4,
            oracle: false,
        },
    ]
}

#[test]
fn frozen_values_of_generated_spaces() {
    let b = || Budget::new(10_000_000);
    for f in frozen() {
        let s = &f.space;
        assert_eq!(radon_number(s, true, &b()).value, Bound::Exact(f.radon), "{}", f.name);
        assert_eq!(helly_number(s, &b()).value, Bound::Exact(f.helly), "{}", f.name);
        assert_eq!(tverberg_number(s, 3, true, &b()).unwrap().value, Bound::Exact(f.tverberg3), "{}", f.name);
        assert_eq!(colorful_helly_number(s, Pool::Generators, &b()).value, Bound::Exact(f.colorful), "{}", f.name);
        if f.oracle {
            assert_eq!(naive_radon_number(s, true), f.radon, "{}", f.name);
            assert_eq!(naive_helly_number(s), f.helly, "{}", f.name);
            assert_eq!(naive_tverberg_number(s, 3, true), f.tverberg3, "{}", f.name);
            assert_eq!(naive_colorful_helly_number(s), f.colorful, "{}", f.name);
        }
    }
}

#[test]
fn one_worker_matches_the_default_pool() {
    for f in frozen() {
        let run = || {
            let b = Budget::new(10_000_000);
            let r = radon_number(&f.space, true, &b);
            let h = helly_number(&f.space, &b);
            (r.value, r.free_set, h.value, h.independent_set, h.witness_family)
        };
        assert_eq!(par::with_threads(1, run), par::with_threads(0, run), "{}", f.name);
    }
}

fn arb_space() -> impl Strategy<Value = ConvexitySpace> {
    (2usize..=6).prop_flat_map(|n| {
        prop::collection::vec(0u64..1 << n, 0..5).prop_map(move |gens| {
            let gens: Vec<PointSet> = gens.into_iter().map(|g| PointSet::from_bits(n, g).unwrap()).collect();
            closure_from_generators(n, &gens, 1 << 12).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn searches_agree_with_oracles(space in arb_space()) {
        let b = Budget::new(10_000_000);
        prop_assert_eq!(radon_number(&space, true, &b).value, Bound::Exact(naive_radon_number(&space, true)));
        prop_assert_eq!(radon_number(&space, false, &b).value, Bound::Exact(naive_radon_number(&space, false)));
        prop_assert_eq!(helly_number(&space, &b).value, Bound::Exact(naive_helly_number(&space)));
        prop_assert_eq!(
            colorful_helly_number(&space, Pool::Full, &b).value,
            Bound::Exact(naive_colorful_helly_number(&space))
        );
    }

    #[test]
    fn inequality_chain(space in arb_space()) {
        let b = Budget::new(10_000_000);
        let h = helly_number(&space, &b).value.value();
        let r = radon_number(&space, true, &b).value.value();
        let t2 = tverberg_number(&space, 2, true, &b).unwrap().value.value();
        let hc = colorful_helly_number(&space, Pool::Generators, &b).value.value();
        prop_assert!(h < r);
        prop_assert!(h <= hc);
        prop_assert_eq!(t2, r);
    }

    #[test]
    fn hull_is_a_closure(space in arb_space(), y in any::<u64>()) {
        let y = y & ((1u64 << space.ground_size()) - 1);
        let h = space.hull_mask(y);
        prop_assert!(space.is_convex_mask(h));
        prop_assert_eq!(h & y, y);
        prop_assert_eq!(space.hull_mask(h), h);
        prop_assert_eq!(h, space.hull_by_definition(y));
    }
}
