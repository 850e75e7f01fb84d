//! The eight small knots: golden Δ, σ₋₁ and jump values, the conjecture
//! check, and the skein-side consistency statements.

use rand::rngs::SmallRng;
use rand::{Rng, SeedableRng};

use sigjump_core::invariants::jump_divisor;
use sigjump_core::qjump::{check_conjecture, jj_divisor, parallel_pullback, KnotRecord, Status};
use sigjump_core::skein::{good_crossings, make_good, skein_jump, verify_lemma_skeins};
use sigjump_core::sympoly::{sign_at, theta_sign};
use sigjump_core::{alexander, signature_at, BraidWord, SymPoly};

struct Knot {
    name: &'static str,
    braid: &'static str,
    delta: &'static [i64],
    p: Option<&'static [i64]>,
    sigma: i32,
}

const CATALOG: &[Knot] = &[
    Knot { name: "3_1", braid: "[1,1,1]", delta: &[1, 1], p: Some(&[0, 2, 1]), sigma: -2 },
    Knot { name: "4_1", braid: "[1,-2,1,-2]", delta: &[1, -1], p: Some(&[]), sigma: 0 },
    Knot { name: "7_2", braid: "[-1,3,3,3,2,1,1,-3,2]", delta: &[1, 3], p: Some(&[0, 12, 14]), sigma: -2 },
    Knot { name: "7_3", braid: "[1,1,2,-1,2,2,2,2]", delta: &[1, 5, 2], p: Some(&[0, 22, 65, 46, 9]), sigma: -4 },
    Knot { name: "7_5", braid: "[1,1,1,1,2,-1,2,2]", delta: &[1, 4, 2], p: None, sigma: -4 },
    Knot { name: "8_2", braid: "[-1,2,2,2,2,2,-1,2]", delta: &[1, 0, -3, -1], p: None, sigma: -4 },
    Knot { name: "8_5", braid: "[1,1,1,-2,1,1,1,-2]", delta: &[1, -1, -3, -1], p: None, sigma: -4 },
    Knot { name: "8_15", braid: "[1,1,-2,1,3,3,2,2,3]", delta: &[1, 4, 3], p: None, sigma: -4 },
];

fn braid(k: &Knot) -> BraidWord {
    BraidWord::parse(k.braid).unwrap()
}

fn record(k: &Knot) -> KnotRecord {
    KnotRecord::new(k.name, braid(k), Some(SymPoly::from_i64s(k.delta)), k.p.map(SymPoly::from_i64s)).unwrap()
}

#[test]
fn alexander_and_signature() {
    for k in CATALOG {
        let v = braid(k).seifert_matrix().unwrap();
        assert_eq!(alexander(&v).unwrap(), SymPoly::from_i64s(k.delta), "{}", k.name);
        assert_eq!(signature_at(&v, 0.5).unwrap(), k.sigma, "{}", k.name);
        let j = jump_divisor(&v).unwrap();
        assert_eq!(j.total(), k.sigma, "{}", k.name);
        assert!(j.satisfies_parity(), "{}", k.name);
        assert!(j.jumps().iter().all(|&v| v == -2), "{}", k.name);
    }
}

#[test]
fn conjecture_statuses() {
    for k in CATALOG {
        let r = check_conjecture(&record(k)).unwrap();
        let expected = match k.name {
            "3_1" | "7_2" | "7_3" => Status::Match,
            "4_1" => Status::Vacuous,
            _ => Status::NoPData,
        };
        assert_eq!(r.status, expected, "{}: {:?}", k.name, r.notes);
        assert_eq!(r.sigma_j, k.sigma);
        if expected == Status::Match {
            assert_eq!(r.sigma_jj, Some(k.sigma));
        }
        for row in &r.rows {
            assert_eq!(row.skein_jump, Some(row.j), "{}", k.name);
        }
    }
}

#[test]
fn skein_jump_is_independent_of_the_crossing() {
    for k in CATALOG {
        let b = braid(k);
        let v = b.seifert_matrix().unwrap();
        for e in jump_divisor(&v).unwrap().entries() {
            let goods = good_crossings(&b, &e.root).unwrap();
            assert!(!goods.is_empty(), "{}: no good crossing without threading", k.name);
            for g in &goods {
                assert_eq!(skein_jump(g).unwrap(), e.jump, "{} pos {}", k.name, g.pos);
            }
            assert_eq!(make_good(&b, &e.root).unwrap().pos, goods[0].pos);
        }
    }
}

#[test]
fn p_signs_follow_the_skein_relation() {
    for k in CATALOG.iter().filter(|k| k.p.is_some_and(|p| !p.is_empty())) {
        let b = braid(k);
        let delta = SymPoly::from_i64s(k.delta);
        let p = SymPoly::from_i64s(k.p.unwrap());
        for e in jump_divisor(&b.seifert_matrix().unwrap()).unwrap().entries() {
            // P does not vanish at a simple Alexander root
            assert_ne!(sign_at(&p, &e.root), 0, "{}", k.name);
            let sp = theta_sign(&p, &e.root).unwrap().sign;
            for g in good_crossings(&b, &e.root).unwrap() {
                let (plus, minus) = g.pair();
                let dp = alexander(&plus.seifert_matrix().unwrap()).unwrap();
                let dm = alexander(&minus.seifert_matrix().unwrap()).unwrap();
                let rhs = g.epsilon * theta_sign(&dp, &e.root).unwrap().sign * theta_sign(&dm, &e.root).unwrap().sign;
                assert_eq!(sp, rhs, "{} pos {}", k.name, g.pos);
            }
        }
        let _ = delta;
    }
}

#[test]
fn lemma_skeins_on_random_triples() {
    let mut rng = SmallRng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 200 {
        let k = &CATALOG[rng.gen_range(0..CATALOG.len())];
        let b = braid(k);
        let pos = rng.gen_range(0..b.len());
        let s: f64 = rng.gen_range(0.001..0.5);
        match verify_lemma_skeins(&b, pos, s) {
            Ok(ok) => {
                assert!(ok, "{} pos {pos} s {s}", k.name);
                checked += 1;
            }
            Err(e) => panic!("{} pos {pos} s {s}: {e}", k.name),
        }
    }
}

#[test]
fn mirror_negates_jumps() {
    for k in CATALOG {
        let v = braid(k).seifert_matrix().unwrap();
        let j = jump_divisor(&v).unwrap();
        let jm = jump_divisor(&v.mirror()).unwrap();
        assert!(jm.matches(&j.negated()), "{}", k.name);
        // the braid mirror gives the same answer
        let jb = jump_divisor(&braid(k).mirror().seifert_matrix().unwrap()).unwrap();
        assert!(jb.matches(&jm), "{}", k.name);
    }
}

#[test]
fn connected_sum_adds_jumps() {
    for a in CATALOG {
        for b in CATALOG {
            let (va, vb) = (braid(a).seifert_matrix().unwrap(), braid(b).seifert_matrix().unwrap());
            let sum = jump_divisor(&va.direct_sum(&vb)).unwrap();
            let expected = jump_divisor(&va).unwrap().union(&jump_divisor(&vb).unwrap());
            assert!(sum.matches(&expected), "{} # {}", a.name, b.name);
            assert!(sum.satisfies_parity(), "{} # {}", a.name, b.name);
            // the braid connected sum realizes the same divisor
            let ba = braid(a);
            let word = ba.concat(&braid(b).shifted(ba.strands() as i32 - 1));
            let viaword = jump_divisor(&word.seifert_matrix().unwrap()).unwrap();
            assert!(viaword.matches(&expected), "{} # {} as a braid", a.name, b.name);
        }
    }
}

#[test]
fn trefoil_square_is_not_simple() {
    let rec = KnotRecord::new(
        "3_1#3_1",
        BraidWord::parse("[1,1,1,2,2,2]").unwrap(),
        Some(SymPoly::from_i64s(&[1, 2, 1])),
        Some(SymPoly::from_i64s(&[0, 4, 2])),
    )
    .unwrap();
    let r = check_conjecture(&rec).unwrap();
    assert_eq!(r.status, Status::NotSimple);
    assert_eq!(r.rows[0].j, -4);
}

#[test]
fn stabilization_and_conjugation() {
    for k in CATALOG {
        let b = braid(k);
        let base = jump_divisor(&b.seifert_matrix().unwrap()).unwrap();
        let n = b.strands() as i32;
        for extra in [n, -n] {
            let mut l = b.letters().to_vec();
            l.push(extra);
            let s = BraidWord::new(l).unwrap();
            assert!(jump_divisor(&s.seifert_matrix().unwrap()).unwrap().matches(&base), "{} stabilized", k.name);
        }
        let mut l = b.letters().to_vec();
        l.rotate_left(1);
        let c = BraidWord::new(l).unwrap();
        assert!(jump_divisor(&c.seifert_matrix().unwrap()).unwrap().matches(&base), "{} conjugated", k.name);
    }
}

#[test]
fn golden_turns() {
    let j = jump_divisor(&BraidWord::parse("[1,1,1]").unwrap().seifert_matrix().unwrap()).unwrap();
    assert!((j.entries()[0].root.turn_f64() - 1.0 / 6.0).abs() < 1e-15);
    let j = jump_divisor(&BraidWord::parse("[1,1,2,-1,2,2,2,2]").unwrap().seifert_matrix().unwrap()).unwrap();
    let t: Vec<f64> = j.entries().iter().map(|e| e.root.turn_f64()).collect();
    assert!((t[0] - 0.075216475230).abs() < 1e-9 && (t[1] - 0.272417529191).abs() < 1e-9, "{t:?}");
}

#[test]
fn parallel_pullback_of_the_trefoil() {
    let d = SymPoly::from_i64s(&[1, 1]);
    let p = SymPoly::from_i64s(&[0, 2, 1]);
    let base = jj_divisor(&d, &p).unwrap();
    for n in [2usize, 3] {
        let pulled = jj_divisor(&parallel_pullback(&d, n), &parallel_pullback(&p, n)).unwrap();
        let mut expected: Vec<(f64, i32)> = Vec::new();
        for e in base.entries() {
            let s0 = e.root.turn_f64();
            for k in 0..n {
                // jj is read off sgn P, which is symmetric under s -> 1 - s, so
                // both preimages carry the same value
                for (u, v) in [((s0 + k as f64) / n as f64, e.jump), (((k + 1) as f64 - s0) / n as f64, e.jump)] {
                    if u > 0.0 && u < 0.5 {
                        expected.push((u, v));
                    }
                }
            }
        }
        expected.sort_by(|a, b| a.0.total_cmp(&b.0));
        let got: Vec<(f64, i32)> = pulled.entries().iter().map(|e| (e.root.turn_f64(), e.jump)).collect();
        assert_eq!(got.len(), expected.len(), "n = {n}");
        for (g, e) in got.iter().zip(&expected) {
            assert!((g.0 - e.0).abs() < 1e-12 && g.1 == e.1, "n = {n}: {got:?} vs {expected:?}");
        }
    }
}

#[test]
fn theta_sign_matches_one_sided_values() {
    for k in CATALOG {
        let d = SymPoly::from_i64s(k.delta);
        for e in jump_divisor(&braid(k).seifert_matrix().unwrap()).unwrap().entries() {
            let ts = theta_sign(&d, &e.root).unwrap();
            let s0 = e.root.turn_f64();
            let after = d.eval_turn(s0 + 1e-4).signum() as i32;
            let before = d.eval_turn(s0 - 1e-4).signum() as i32;
            assert_eq!(ts.order, 1);
            assert_eq!(after, ts.sign, "{}", k.name);
            assert_eq!(before, -ts.sign, "{}", k.name);
        }
    }
}
