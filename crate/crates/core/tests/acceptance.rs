//! Acceptance suite: one line per criterion, exact equality throughout.
//! Runs as a plain binary (`harness = false`) so the verdict lines are always
//! printed; the process fails if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use brill_core::brill::{
    bbar, bbar_vj_closed, brill_b, e_map, girard_terms, pi_dd, q_map, qbar, qbar_power_form,
    symbolic_brill, general_form, vj,
};
use brill_core::chow::{expand_product, is_brill_zero, sample, sample_linear_forms, SampleKind};
use brill_core::pairing::{image_pattern, pairing_closed_form, pairing_generic};
use brill_core::rep::{
    highest_weight_vectors, hwv_tilde, multiplicity, pieri_components, weight_basis_curly,
    weyl_dim, Partition, Raise,
};
use brill_core::{CurlyElement, MPoly, Mono, Rational, SymElement, Tens2Element};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn sym(n: usize, d: u32, s: &str) -> SymElement {
    SymElement::parse(n, d, s).unwrap()
}

fn tens(grade: (u32, u32), s: &str) -> Tens2Element {
    Tens2Element::parse(3, grade, s).unwrap()
}

fn curly(grade: (u32, u32), s: &str) -> CurlyElement {
    CurlyElement::parse(3, grade, s).unwrap()
}

fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(p, q).unwrap()
}

fn c1_golden_examples() -> Outcome {
    let f = sym(3, 3, "e1*e2*e3");
    ensure!(
        e_map(&f, 1).unwrap() == tens((1, 2), "e1@e2*e3 + e3@e1*e2 + e2@e1*e3"),
        "E_1(e1e2e3)"
    );
    ensure!(
        e_map(&f, 2).unwrap()
            == tens((2, 4), "e1*e2@e1*e2*e3^2 + e1*e3@e1*e2^2*e3 + e2*e3@e1^2*e2*e3"),
        "E_2(e1e2e3)"
    );
    ensure!(e_map(&f, 3).unwrap() == tens((3, 6), "e1*e2*e3@e1^2*e2^2*e3^2"), "E_3(e1e2e3)");

    let render = |k, d| {
        girard_terms(k, d)
            .iter()
            .map(|t| format!("{}:{:?}", t.coeff, t.multidegree))
            .collect::<Vec<_>>()
            .join(" ")
    };
    ensure!(render(2, 2) == "1:[2, 0] -2:[0, 1]", "p_2 = {}", render(2, 2));
    ensure!(render(3, 3) == "1:[3, 0, 0] -3:[1, 1, 0] 3:[0, 0, 1]", "p_3 = {}", render(3, 3));

    for s in ["e1*e2", "e1^2 - 3*e2*e3 + 1/2*e3^2", "2*e1*e3 + e2^2 - e1*e2"] {
        let f = sym(3, 2, s);
        let p = f.polarize(1).unwrap();
        let form = p.mul(&p).unwrap() - Tens2Element::tensor(&f, &f).unwrap().scaled(&Rational::from(2));
        ensure!(q_map(&f, 2).unwrap() == form, "Q_2({s}) ≠ f_{{1,1}}² - 2 f⊗f");
    }

    let qb = |a: &str, b: &str| qbar(&[sym(3, 2, a), sym(3, 2, b)]).unwrap();
    let q_cases = [
        ("e1*e2", "e1*e2", "e1^2@e2^2 + e2^2@e1^2"),
        ("e1^2", "e1*e2", "e1^2@e1*e2 + e1*e2@e1^2"),
        ("e1*e2", "e1*e3", "e1^2@e2*e3 + e2*e3@e1^2"),
        ("e1*e2", "e3^2", "2*e1*e3@e2*e3 + 2*e2*e3@e1*e3 - e3^2@e1*e2 - e1*e2@e3^2"),
    ];
    for (a, b, expected) in q_cases {
        ensure!(qb(a, b) == tens((2, 2), expected), "Q̄_2({a}·{b})");
    }

    let bb = |xs: [&str; 3]| bbar(&xs.map(|s| sym(3, 2, s))).unwrap();
    ensure!(bb(["e1*e2", "e1*e2", "e1^2"]).is_zero(), "𝔅̄(e1e2·e1e2·e1²) ≠ 0");
    ensure!(bb(["e1*e2", "e1*e2", "e1*e3"]).is_zero(), "𝔅̄(e1e2·e1e2·e1e3) ≠ 0");
    let got = bb(["e1*e2", "e1*e2", "e3^2"]);
    let two_thirds = ratio(2, 3);
    let printed = curly(
        (2, 2),
        "w13^2@e2^2 + w23^2@e1^2 + w12^2@e3^2 - 2*w12*w13@e2*e3 - 2*w12*w23@e1*e2 - 2*w13*w23@e1*e2",
    )
    .scaled(&two_thirds);
    // the printed cross term -2(e1∧e2)(e2∧e3)⊗e1e2 has the wrong weight;
    // the computed value carries +2(e1∧e2)(e2∧e3)⊗e1e3 instead
    let typo_fix = curly((2, 2), "2*w12*w23@e1*e2 + 2*w12*w23@e1*e3").scaled(&two_thirds);
    ensure!(
        got == printed.clone() + typo_fix,
        "𝔅̄(e1e2·e1e2·e3²) = {got:?}, differs from the printed display by more than the logged cross term"
    );
    ensure!(got != printed, "printed display unexpectedly exact");
    Ok("E_1..E_3, p_2, p_3, Q_2 form, four Q̄_2, three 𝔅̄ (one display typo logged)".into())
}

fn c2_vanishing_on_products() -> Outcome {
    let mut timings = Vec::new();
    for d in 2..=5u32 {
        let start = Instant::now();
        let bad: Vec<u64> = (0..100u64)
            .into_par_iter()
            .filter(|&seed| {
                let f = sample(seed, d, 3, SampleKind::Chow);
                !brill_b(&f).unwrap().is_zero()
            })
            .collect();
        ensure!(bad.is_empty(), "d = {d}: 𝔅 ≠ 0 for seeds {bad:?}");
        timings.push(format!("d={d} {:.1?}", start.elapsed()));
    }
    Ok(format!("100 products per d = 2..5 ({})", timings.join(", ")))
}

fn c3_non_membership() -> Outcome {
    ensure!(!is_brill_zero(&sym(3, 2, "e1*e2 + e3^2")).unwrap(), "𝔅(e1e2+e3²) = 0");
    ensure!(!is_brill_zero(&sym(3, 3, "e1^3 + e2^3 + e3^3")).unwrap(), "𝔅(Fermat cubic) = 0");
    Ok("e1e2+e3² and e1³+e2³+e3³".into())
}

fn c4_main_theorem_pattern() -> Outcome {
    let expected = |d: u32, j: u32| j >= 2 && (d, j) != (3, 3);
    let mut d4 = Duration::ZERO;
    for d in 2..=4u32 {
        let start = Instant::now();
        for (j, in_image) in image_pattern(d) {
            ensure!(in_image == expected(d, j), "image_pattern({d}) at j = {j}");
            let g = pairing_generic(d, j).unwrap().value;
            ensure!(g.is_zero() != in_image, "generic pairing d = {d}, j = {j} is {g}");
        }
        if d == 4 {
            d4 = start.elapsed();
        }
    }
    for d in 2..=8u32 {
        for j in 0..=d {
            let c = pairing_closed_form(d, j).unwrap().value;
            ensure!(c.is_zero() != expected(d, j), "closed-form pairing d = {d}, j = {j} is {c}");
        }
    }
    ensure!(d4 < Duration::from_secs(300), "d = 4 generic path took {d4:?}");
    Ok(format!("generic d = 2..4, closed form d = 2..8 (d = 4 generic {d4:.1?})"))
}

fn c5_closed_forms() -> Outcome {
    for d in 2..=4u32 {
        for j in 0..=d {
            let generic = bbar(&vj(d, j)).unwrap();
            let closed = bbar_vj_closed(d, j).unwrap();
            ensure!(
                closed == generic,
                "closed form of 𝔅̄(v_j) (three-sum display) disagrees at d = {d}, j = {j}:\n  closed  {closed:?}\n  generic {generic:?}"
            );
            let pg = pairing_generic(d, j).unwrap().value;
            let pc = pairing_closed_form(d, j).unwrap().value;
            ensure!(
                pg == pc,
                "closed form of ⟨𝔅̄(v_j), ṽ_j⟩ disagrees at d = {d}, j = {j}: closed {pc}, generic {pg}"
            );
        }
    }
    Ok("𝔅̄(v_j) and ⟨𝔅̄(v_j), ṽ_j⟩ closed forms equal generic path, d = 2..4".into())
}

fn c6_representation_layer() -> Outcome {
    let p = |parts: &[u32]| Partition::new(parts).unwrap();
    ensure!(multiplicity(&p(&[4, 2]), 3, 2, 5000).unwrap() == 1, "mult (4,2) in S³(S²)");
    ensure!(multiplicity(&p(&[6, 3, 3]), 4, 3, 5000).unwrap() == 0, "mult (6,3,3) in S⁴(S³)");
    ensure!(weyl_dim(&p(&[2, 2, 2])).unwrap() == 1, "dim S_(2,2,2)");
    ensure!(weyl_dim(&p(&[7, 3, 2])).unwrap() == 35, "dim S_(7,3,2)");
    for d in 1..=10u32 {
        let c = u128::from((d + 2) * (d + 1) / 2);
        ensure!(weyl_dim(&p(&[d, d])).unwrap() == c, "dim S_(d,d) at d = {d}");
    }
    for d in 2..=6u32 {
        for j in 0..=d {
            let v = hwv_tilde(d, j).unwrap();
            ensure!(v.raise(0, 1).is_zero(), "E^1_2 ṽ_{j} ≠ 0 at d = {d}");
            ensure!(v.raise(1, 2).is_zero(), "E^2_3 ṽ_{j} ≠ 0 at d = {d}");
            let basis = weight_basis_curly(d, j).unwrap();
            let hw = highest_weight_vectors(d, d * d - d, &basis);
            ensure!(hw.len() == 1, "highest weight space has dim {} at d = {d}, j = {j}", hw.len());
        }
    }
    Ok("multiplicities, Weyl dimensions, ṽ_j annihilated, 1-dim highest weight spaces (d ≤ 6)".into())
}

fn random_form(rng: &mut ChaCha8Rng, d: u32) -> SymElement {
    sample(rng.gen(), d, 3, SampleKind::Generic)
}

fn c7_polarization_identities() -> Outcome {
    const CASES: usize = 200;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..CASES {
        let d = rng.gen_range(2..=4u32);
        let f = random_form(&mut rng, d);
        let g = random_form(&mut rng, d);

        ensure!(
            bbar(&vec![f.clone(); d as usize + 1]).unwrap() == brill_b(&f).unwrap(),
            "case {case}: 𝔅̄(f,…,f) ≠ 𝔅(f), d = {d}"
        );
        ensure!(
            qbar(&vec![f.clone(); d as usize]).unwrap() == q_map(&f, d).unwrap(),
            "case {case}: Q̄(f,…,f) ≠ Q_d(f), d = {d}"
        );

        let mut fs: Vec<SymElement> = (0..d).map(|_| random_form(&mut rng, d)).collect();
        let before = qbar(&fs).unwrap();
        fs.shuffle(&mut rng);
        ensure!(qbar(&fs).unwrap() == before, "case {case}: Q̄ not symmetric, d = {d}");

        let mut args = vec![f.clone(); d as usize - 1];
        args.push(g.clone());
        ensure!(
            qbar_power_form(&f, &g, d).unwrap() == qbar(&args).unwrap(),
            "case {case}: Q̄(f^(d-1) g) formula ≠ generic path, d = {d}"
        );

        let ls = sample_linear_forms(rng.gen(), d, 3);
        let linear: Vec<SymElement> = ls
            .forms()
            .iter()
            .map(|l| SymElement::linear(&l.iter().map(|&c| Rational::from(c)).collect::<Vec<_>>()))
            .collect();
        let mut expected = Tens2Element::zero(3, (d, d * d - d));
        for j in 0..d as usize {
            let rest = (0..d as usize)
                .filter(|&k| k != j)
                .fold(SymElement::one(3), |acc, k| acc.mul(&linear[k].pow(d)).unwrap());
            expected += &Tens2Element::tensor(&linear[j].pow(d), &rest).unwrap();
        }
        ensure!(
            q_map(&expand_product(&ls), d).unwrap() == expected,
            "case {case}: Q_d(l_1⋯l_d) ≠ Σ l_j^d ⊗ ∏ l_k^d, d = {d}"
        );

        let h = sym(3, 2, "e1^2").mul(&random_form(&mut rng, d - 2)).unwrap();
        let target = SymElement::monomial(Mono::new(&[d as u16 - 1, 1, 0]), Rational::from(1));
        let t = Tens2Element::tensor(&h, &target).unwrap();
        ensure!(pi_dd(&t).unwrap().is_zero(), "case {case}: π(e1²h', e1^(d-1)e2) ≠ 0, d = {d}");
    }
    Ok(format!("{CASES} random cases × 6 identities"))
}

fn c8_symbolic_generation() -> Outcome {
    let start = Instant::now();
    let eqs = symbolic_brill(2, 3, 10_000_000).unwrap();
    ensure!(!eqs.is_empty(), "no equations for d = 2, n = 3");
    let (monos, _) = general_form(2, 3);
    let l1 = SymElement::linear(&[MPoly::var(0), MPoly::var(1), MPoly::var(2)]);
    let l2 = SymElement::linear(&[MPoly::var(3), MPoly::var(4), MPoly::var(5)]);
    let product = l1.mul(&l2).unwrap();
    let at = |f: &SymElement<MPoly>| -> Vec<MPoly> {
        monos.iter().map(|m| f.coeff(m).cloned().unwrap_or_else(MPoly::zero)).collect()
    };
    let symbolic_point = at(&product);
    let quadric = sym(3, 2, "e1*e2 + e3^2");
    let point: Vec<Rational> =
        monos.iter().map(|m| quadric.coeff(m).cloned().unwrap_or_else(Rational::zero)).collect();
    let mut nonzero = 0;
    for e in &eqs {
        ensure!(
            e.poly.substitute(&symbolic_point).is_zero(),
            "equation at {} ⊗ {} does not vanish on l_1 l_2",
            e.wedge,
            e.mono
        );
        if !e.poly.substitute(&point).is_zero() {
            nonzero += 1;
        }
    }
    ensure!(nonzero > 0, "every equation vanishes at e1e2+e3²");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!("{} equations, {nonzero} nonzero at e1e2+e3² ({elapsed:.1?})", eqs.len()))
}

fn c9_dimension_bookkeeping() -> Outcome {
    for d in 1..=10u32 {
        let c = |x: u32| u128::from(x + 2) * u128::from(x + 1) / 2;
        let sum: u128 = pieri_components(d).iter().map(|l| weyl_dim(l).unwrap()).sum();
        ensure!(sum == c(d) * c(d * d - d), "d = {d}: Σ dim = {sum}");
    }
    Ok("Σ_j dim S_(d²-j,d,j) = dim S^d(∧²ℂ³)·dim S^(d²-d)ℂ³, d ≤ 10".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("golden examples", c1_golden_examples),
        ("set-theoretic vanishing", c2_vanishing_on_products),
        ("non-membership", c3_non_membership),
        ("main theorem pattern", c4_main_theorem_pattern),
        ("closed-form cross-checks", c5_closed_forms),
        ("representation layer", c6_representation_layer),
        ("polarization identities", c7_polarization_identities),
        ("symbolic generation", c8_symbolic_generation),
        ("dimension bookkeeping", c9_dimension_bookkeeping),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} [{elapsed:.1?}] {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} [{elapsed:.1?}] {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
