use std::sync::Arc;

use proptest::prelude::*;

use biset_core::biset::{tensor_direct, BisetView};
use biset_core::blocks::{analyze_blocks, central_character_partition, BlockOptions};
use biset_core::charmod::{bouc_formula_sides, contract_extended, ClassFunction};
use biset_core::field::Field;
use biset_core::io::{bundled_names, bundled_table};
use biset_core::subdirect::{middle_kernel, pullback, star, ProductSubgroup};
use biset_core::suite::Sampler;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn star_is_associative_and_monotone(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 8).unwrap();
        let (g, h, k, l) = (s.group(), s.group(), s.group(), s.group());
        let x = s.product_subgroup(&g, &h);
        let y = s.product_subgroup(&h, &k);
        let z = s.product_subgroup(&k, &l);
        let left = star(&star(&x, &y).unwrap(), &z).unwrap();
        let right = star(&x, &star(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(left.subgroup(), right.subgroup());
        let (xp, yp) = (s.sub_product(&x), s.sub_product(&y));
        let small = star(&xp, &yp).unwrap();
        prop_assert!(small.subgroup().is_subgroup_of(star(&x, &y).unwrap().subgroup()));
    }

    #[test]
    fn star_respects_projections_and_kernels(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 12).unwrap();
        let (g, h, k) = (s.group(), s.group(), s.group());
        let x = s.product_subgroup(&g, &h);
        let y = s.product_subgroup(&h, &k);
        let xy = star(&x, &y).unwrap();
        prop_assert!(x.k1().is_subgroup_of(xy.k1()));
        prop_assert!(xy.k1().is_normal_in(xy.p1()));
        prop_assert!(xy.p1().is_subgroup_of(x.p1()));
        prop_assert!(y.k2().is_subgroup_of(xy.k2()));
        prop_assert!(xy.k2().is_normal_in(xy.p2()));
        prop_assert!(xy.p2().is_subgroup_of(y.p2()));
        let inner = ProductSubgroup::product_of(x.k1(), y.k2());
        let outer = ProductSubgroup::product_of(x.p1(), y.p2());
        prop_assert!(inner.subgroup().is_subgroup_of(xy.subgroup()));
        prop_assert!(xy.subgroup().is_subgroup_of(outer.subgroup()));
        let pb = pullback(&x, &y).unwrap();
        let kern = middle_kernel(&x, &y).unwrap();
        prop_assert_eq!(pb.pullback.order(), xy.order() * kern.order());
        prop_assert_eq!(pb.kernel.order(), kern.order());
    }

    #[test]
    fn orbit_stabilizer(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 12).unwrap();
        let g = s.group();
        let a = s.gset(&biset_core::group::Subgroup::full(&g)).unwrap();
        for orbit in a.orbits() {
            prop_assert_eq!(orbit.len() * a.stabilizer(orbit[0]).order(), g.order());
        }
    }

    #[test]
    fn permutation_characters_are_additive_and_linearize_tensors(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 8).unwrap();
        let (g, h, k) = (s.group(), s.group(), s.group());
        let full = biset_core::group::Subgroup::full(&g);
        let (a, b) = (s.gset(&full).unwrap(), s.gset(&full).unwrap());
        let sum = ClassFunction::perm_character(&a.disjoint_union(&b).unwrap());
        prop_assert_eq!(sum, ClassFunction::perm_character(&a).add(&ClassFunction::perm_character(&b)).unwrap());

        let (x, y) = (s.product_subgroup(&g, &h), s.product_subgroup(&h, &k));
        let (u, v) = (BisetView::from_product_subgroup(&x).unwrap(), BisetView::from_product_subgroup(&y).unwrap());
        let t = tensor_direct(&u, &v).unwrap();
        let gh = ProductSubgroup::full(&g, &h);
        let hk = ProductSubgroup::full(&h, &k);
        let contracted = contract_extended(
            &gh,
            &hk,
            &ClassFunction::perm_character(u.as_gaction()),
            &ClassFunction::perm_character(v.as_gaction()),
        )
        .unwrap();
        prop_assert_eq!(ClassFunction::perm_character(t.as_gaction()), contracted);
    }

    #[test]
    fn frobenius_reciprocity(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 12).unwrap();
        let g = s.group();
        let full = biset_core::group::Subgroup::full(&g);
        let sub = s.subgroup(&full);
        let psi = s.induced_linear(&sub).unwrap();
        let chi = s.induced_linear(&full).unwrap();
        let lhs = psi.induce(&full).unwrap().inner_product(&chi).unwrap();
        let rhs = psi.inner_product(&chi.restrict(&sub).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn larger_conductor_gives_the_same_values(seed in any::<u64>()) {
        let mut s = Sampler::new(seed, 6).unwrap();
        let (g, h, k) = (s.group(), s.group(), s.group());
        let (x, y) = (s.product_subgroup(&g, &h), s.product_subgroup(&h, &k));
        let (cm, cn) = (s.induced_linear(x.subgroup()).unwrap(), s.induced_linear(y.subgroup()).unwrap());
        let (lhs, rhs) = bouc_formula_sides(&x, &y, &cm, &cn).unwrap();
        let m = 5 * cm.conductor().max(1) * cn.conductor().max(1);
        let (lhs2, rhs2) = bouc_formula_sides(&x, &y, &cm.lift(m), &cn.lift(m)).unwrap();
        prop_assert_eq!(&lhs, &lhs2);
        prop_assert_eq!(&rhs, &rhs2);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn central_characters_separate_exactly_the_blocks() {
    for name in bundled_names() {
        let t = bundled_table(name).unwrap();
        let order = t.group().order() as u64;
        for p in [2u64, 3] {
            if order % p != 0 {
                continue;
            }
            let f = Arc::new(Field::splitting(t.group().ambient().exponent(), p).unwrap());
            let blocks = analyze_blocks(&f, t.group(), Some(&t), BlockOptions::default()).unwrap();
            let mut parts: Vec<Vec<usize>> = blocks.iter().map(|b| b.characters.clone()).collect();
            parts.sort();
            assert_eq!(parts, central_character_partition(&t, &f).unwrap(), "{name} at p={p}");
            let principal = &blocks[0];
            assert!(principal.is_principal());
            assert_eq!(principal.defect_group.order(), t.group().sylow(p).order(), "{name} at p={p}");
        }
    }
}
