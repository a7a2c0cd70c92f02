//! Recomputes the C6/C3 scenario by direct summation over the vertex and
//! compares with the pipeline.

use biset_core::cyclotomic::Cyclotomic;
use biset_core::group::{Permutation, Subgroup};
use biset_core::io::bundled_table;
use biset_core::scenario::{bundled_scenario, run_scenario};

fn elem(g: &biset_core::group::FiniteGroup, s: &str) -> u32 {
    g.find_permutation(&s.parse::<Permutation>().unwrap()).unwrap()
}

#[test]
fn c6_c3_by_direct_summation() {
    let tg = bundled_table("C6").unwrap();
    let th = bundled_table("C3").unwrap();
    let (g, h) = (tg.group().ambient().clone(), th.group().ambient().clone());
    let a = elem(&g, "(1,3,5)(2,4,6)");
    let y = elem(&h, "(1,2,3)");
    // X = {(a^k, y^k)}
    let x: Vec<(u32, u32)> = (0..3).map(|k| (g.pow(a, k), h.pow(y, k))).collect();

    // the block of l3: characters agreeing with l3 on the element of order 2
    let t = elem(&g, "(1,4)(2,5)(3,6)");
    let l3 = tg.index_of("l3").unwrap();
    let block: Vec<usize> = (0..tg.len()).filter(|&i| tg.irr()[i].value(t) == tg.irr()[l3].value(t)).collect();
    assert_eq!(block.len(), 3);

    // m(chi, psi) = |X|^-1 sum_{(g,h) in X} conj(chi(g)) psi(h)
    let mut images = Vec::new();
    for psi in th.irr() {
        let mut hits = Vec::new();
        for &ci in &block {
            let chi = &tg.irr()[ci];
            let mut s = Cyclotomic::zero();
            for &(gg, hh) in &x {
                s += &(&chi.value(gg).conj() * psi.value(hh));
            }
            let s = s.to_integer().expect("integral sum") as i64;
            assert_eq!(s % 3, 0);
            if s != 0 {
                hits.push((ci, s / 3));
            }
        }
        assert_eq!(hits.len(), 1);
        images.push(hits[0]);
    }
    let mut targets: Vec<usize> = images.iter().map(|t| t.0).collect();
    targets.sort();
    assert_eq!(targets, block);
    assert!(images.iter().all(|t| t.1 == 1));

    // beta = sign |G| psi(1) / (|H| chi(1)) mod 3, here 6/3 = 2
    let ratios: Vec<i64> = images.iter().map(|&(_, sign)| sign * 6 / 3).collect();
    assert!(ratios.iter().all(|&r| r.rem_euclid(3) == 2));

    // b(B,C) from |C_G(D)/Z(D)| / |C_H(E)/Z(E)| with dim V = dim W = 1
    let gs = Subgroup::full(&g);
    let d = Subgroup::generate(&g, &[a]);
    let hs = Subgroup::full(&h);
    let e = Subgroup::generate(&h, &[y]);
    let local = (gs.centralizer(&d).order() / d.center().order()) / (hs.centralizer(&e).order() / e.center().order());
    assert_eq!(local, 2);

    let r = run_scenario(&bundled_scenario("c6_c3").unwrap()).unwrap();
    assert_eq!(r.verdict.beta_gamma, 2);
    assert_eq!(r.verdict.local.value, local.to_string());
    assert_eq!(r.verdict.isometry.len(), images.len());
}
