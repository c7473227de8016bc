use polydual::constructions::{polygon, torus44};
use polydual::cpr::family_all_p;
use polydual::duality::{dualizing_set, is_dualizing};
use polydual::fpgroup::torus44_presentation;
use polydual::mixer::{comix_criterion, int_to_ext, mix, mix_edge, mix_internally_self_dual, shares_dualizing_word};
use polydual::{classify, covers, DualityClass};

#[test]
fn mix_covers_both_factors() {
    for (a, b) in [(3, 4), (5, 6), (4, 6), (7, 7)] {
        let (p, q) = (polygon(a).unwrap(), polygon(b).unwrap());
        let m = mix(&p, &q).unwrap();
        assert!(covers(&m.sggi, &p).unwrap());
        assert!(covers(&m.sggi, &q).unwrap());
        let l = a * b / gcd(a, b);
        assert_eq!(m.sggi.order(), 2 * l as u128);
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[test]
fn torus_mixes() {
    for (a, b) in [(3, 5), (3, 4), (2, 3)] {
        let (p, q) = (torus44(a).unwrap().sggi, torus44(b).unwrap().sggi);
        let l = a * b / gcd(a, b);
        let m = mix(&p, &q).unwrap();
        assert_eq!(m.sggi.order(), 8 * (l * l) as u128);
        assert_eq!(mix_internally_self_dual(&p, &q).unwrap(), l % 2 == 1);
    }
}

#[test]
fn comix_criterion_agrees_with_the_mix() {
    for (a, b) in [(3, 5), (3, 4), (5, 7)] {
        let (p, q) = (torus44(a).unwrap().sggi, torus44(b).unwrap().sggi);
        let by_comix = comix_criterion(&p, &q, &torus44_presentation(a), &torus44_presentation(b), 100_000).unwrap();
        assert_eq!(by_comix, mix_internally_self_dual(&p, &q).unwrap(), "{a} {b}");
    }
}

#[test]
fn shared_word_makes_the_mix_internal() {
    let w: Vec<usize> = [0, 2, 1].repeat(6);
    for (a, b) in [(7, 9), (8, 11)] {
        let p = family_all_p(a).unwrap().to_sggi().unwrap();
        let q = family_all_p(b).unwrap().to_sggi().unwrap();
        assert!(shares_dualizing_word(&p, &q, &w));
        let m = mix(&p, &q).unwrap();
        assert!(is_dualizing(&m.sggi, &m.sggi.evaluate(&w)).unwrap());
    }
    let (p, q) = (polygon(5).unwrap(), polygon(7).unwrap());
    assert!(!shares_dualizing_word(&p, &q, &[0, 1, 0, 1, 0]));
}

#[test]
fn edge_chain_for_all_p() {
    for p in [7, 9, 11] {
        let s = family_all_p(p).unwrap().to_sggi().unwrap();
        assert_eq!(mix_edge(&s, 0).unwrap().order(), 2 * s.order());
        let x = int_to_ext(&s).unwrap();
        assert_eq!(x.order(), 4 * s.order());
        assert_eq!(classify(&x).unwrap(), DualityClass::ExternallySelfDual);
        assert_eq!(x.schlafli_type().0, vec![2 * p as u64, 2 * p as u64]);
        assert!(x.is_string_c_group().unwrap());
    }
}

#[test]
fn dualizing_set_of_a_mix_projects() {
    let (p, q) = (torus44(3).unwrap().sggi, torus44(5).unwrap().sggi);
    let m = mix(&p, &q).unwrap();
    for a in dualizing_set(&m.sggi).unwrap() {
        let n = m.left_degree;
        assert!(is_dualizing(&p, &a.restrict(0, n)).unwrap());
        assert!(is_dualizing(&q, &a.restrict(n, q.degree())).unwrap());
    }
}
