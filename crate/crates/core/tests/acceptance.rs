//! Acceptance suite: one line per criterion with its timing. Exits nonzero
//! if any criterion fails or runs past its limit.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use unisecant::cubic::{
    ec_scalar_mul, flexes, hessian, j_invariant, normal_form, weierstrass_any_flex,
    weierstrass_at_flex, AffineECPoint, WeierstrassData,
};
use unisecant::exactalg::{int, ratio, Matrix3};
use unisecant::fixtures;
use unisecant::kontsevich::{compute_nk, NkTable};
use unisecant::pencils::{
    contact_conic_check, flex_pencil_count, nonflex_fiber_accounting, unisecant_count_k3,
    ConicKind, MemberKind,
};
use unisecant::singular::{
    blowup_intersection_identity, family_derivative_check, geometric_genus, genus_bound, intersect,
    lemma5_certificate, lemma5_datum, local_intersection_blowup,
};
use unisecant::torsion::{contact_count, enumerate_contact_classes, primitive_contact_count};
use unisecant::{Error, HomogeneousForm, ProjectivePoint};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T>(r: unisecant::Result<T>) -> Result<T, String> {
    r.map_err(|err| err.to_string())
}

fn timed<T>(limit: Duration, f: impl FnOnce() -> Result<T, String>) -> Result<T, String> {
    let start = Instant::now();
    let v = f()?;
    let el = start.elapsed();
    ensure(el < limit, format!("took {el:?}, limit {limit:?}"))?;
    Ok(v)
}

fn c1() -> Outcome {
    let small = timed(Duration::from_secs(1), || {
        (1..=4).map(|k| e(compute_nk(k))).collect::<Result<Vec<_>, _>>()
    })?;
    let want: Vec<BigInt> = [1, 1, 12, 620].iter().map(|&n| BigInt::from(n)).collect();
    ensure(small == want, format!("N_1..N_4 = {small:?}"))?;
    let table = timed(Duration::from_secs(5), || e(NkTable::compute(12)))?;
    ensure(table.max_k() == 12, "table short")?;
    Ok(format!("N_1..4 = 1, 1, 12, 620; N_12 = {}", table.get(12).unwrap()))
}

fn c2() -> Outcome {
    timed(Duration::from_secs(1), || {
        for k in 1..=20u64 {
            let closed = e(contact_count(k))?;
            // independent lattice count: points (a/3k, b/3k) of the torus
            let mut brute = 0u64;
            for a in 0..3 * k {
                for b in 0..3 * k {
                    if (3 * k * a) % (3 * k) == 0 && (3 * k * b) % (3 * k) == 0 {
                        brute += 1;
                    }
                }
            }
            ensure(closed == 9 * k * k && brute == closed, format!("k = {k}"))?;
            ensure(e(enumerate_contact_classes(k))?.len() as u64 == closed, format!("enumeration k = {k}"))?;
        }
        ensure(e(contact_count(1))? == 9 && e(contact_count(2))? == 36, "k = 1, 2")?;
        Ok("9k² for k ≤ 20, enumeration agrees".to_string())
    })
}

fn brute_primitive(k: u64) -> u64 {
    let mut count = 0;
    for n in 0..3 * k {
        for m in 0..3 * k {
            let first = (1..=k).find(|k1| (k1 * n) % k == 0 && (k1 * m) % k == 0).unwrap();
            if first == k {
                count += 1;
            }
        }
    }
    count
}

fn c3() -> Outcome {
    timed(Duration::from_secs(5), || {
        let first: Vec<u64> = (1..=3).map(|k| e(primitive_contact_count(k))).collect::<Result<_, _>>()?;
        ensure(first == [9, 27, 72], format!("{first:?}"))?;
        for k in 1..=50u64 {
            let p = e(primitive_contact_count(k))?;
            ensure(p == brute_primitive(k), format!("Möbius vs brute force at k = {k}"))?;
            let sum: u64 = (1..=k)
                .filter(|d| k % d == 0)
                .map(|d| primitive_contact_count(d).unwrap())
                .sum();
            ensure(sum == 9 * k * k, format!("partition identity at k = {k}"))?;
        }
        Ok("9, 27, 72; Möbius = brute force for k ≤ 50".to_string())
    })
}

fn c4() -> Outcome {
    let h = e(hessian(&fixtures::fermat()))?;
    ensure(h == HomogeneousForm::from_int_terms(3, &[(1, 1, 1, 216)]), format!("Hessian {h}"))?;
    let curves = fixtures::smooth_cubics();
    for c in &curves {
        timed(Duration::from_secs(1), || {
            let f = e(flexes(&c.form))?;
            ensure(
                f.count_with_multiplicity == 9 && f.distinct == 9 && f.eliminant_squarefree(),
                format!("{}: {} / {}", c.name, f.count_with_multiplicity, f.distinct),
            )
        })
        .map_err(|m| format!("{}: {m}", c.name))?;
    }
    Ok(format!("Hessian 216·X0X1X2; 9 distinct flexes on {} fixtures", curves.len()))
}

fn c5() -> Outcome {
    let cases = [
        ("fermat", fixtures::fermat(), 1),
        ("nodal", fixtures::nodal_cubic(), 0),
        ("cuspidal", fixtures::cuspidal_cubic(), 0),
        ("tricuspidal", fixtures::tricuspidal_quartic(), 0),
    ];
    for (name, f, g) in cases {
        let got = timed(Duration::from_secs(1), || e(geometric_genus(&f, false)))?;
        ensure(got == g, format!("{name}: genus {got}, expected {g}"))?;
    }
    Ok("1, 0, 0, 0".to_string())
}

fn random_form(rng: &mut ChaCha8Rng, d: u32) -> HomogeneousForm {
    loop {
        let mut terms = Vec::new();
        for m in HomogeneousForm::monomials(d) {
            if rng.gen_bool(0.5) {
                terms.push((m, int(rng.gen_range(-4..=4))));
            }
        }
        let f = HomogeneousForm::from_terms(d, terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

fn random_line_product(rng: &mut ChaCha8Rng, d: u32) -> HomogeneousForm {
    let mut f = HomogeneousForm::constant(int(1));
    for _ in 0..d {
        let l = loop {
            let c = [int(rng.gen_range(-2..=2)), int(rng.gen_range(-2..=2)), int(rng.gen_range(-2..=2))];
            if c.iter().any(|x| !x.is_zero()) {
                break HomogeneousForm::linear(&c);
            }
        };
        f = &f * &l;
    }
    f
}

fn c6() -> Outcome {
    timed(Duration::from_secs(30), || {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        let mut pairs = 0;
        let mut line_pairs = 0;
        while pairs < 200 {
            let (d1, d2) = (rng.gen_range(1..=4), rng.gen_range(1..=4));
            // half the pairs are products of lines, whose intersections are
            // all rational and may be tangential or at multiple points
            let lines = pairs % 2 == 1;
            let (f, g) = if lines {
                (random_line_product(&mut rng, d1), random_line_product(&mut rng, d2))
            } else {
                (random_form(&mut rng, d1), random_form(&mut rng, d2))
            };
            let x = match intersect(&f, &g) {
                Err(Error::CommonComponent) => continue,
                other => e(other)?,
            };
            ensure(x.total() == (d1 * d2) as usize, format!("pair {pairs}: {} ≠ {}", x.total(), d1 * d2))?;
            if lines {
                ensure(x.irrational_multiplicity == 0, "line products meet rationally")?;
                let local: usize = x
                    .points
                    .iter()
                    .map(|(p, _)| local_intersection_blowup(&f, &g, p).unwrap())
                    .sum();
                ensure(local == (d1 * d2) as usize, format!("pair {pairs}: blow-up sum {local}"))?;
                line_pairs += 1;
            }
            pairs += 1;
        }
        let corpus: Vec<HomogeneousForm> = fixtures::all_curves().into_iter().map(|c| c.form).collect();
        let mut checked = 0;
        for f in &corpus {
            for g in &corpus {
                if f == g {
                    continue;
                }
                let s = e(blowup_intersection_identity(f, g))?;
                ensure(s.holds(), format!("identity {} ≠ {} + {}", s.lhs, s.transform_term, s.mu_delta))?;
                checked += 1;
            }
        }
        // line X1 = 2X0 through the node of X1²X2 = X0²(X0 + X2)
        let line = HomogeneousForm::from_int_terms(1, &[(0, 1, 0, 1), (1, 0, 0, -2)]);
        let s = e(blowup_intersection_identity(&fixtures::nodal_cubic(), &line))?;
        ensure(
            (s.lhs, s.transform_term, s.mu_delta) == (3, 1, 2),
            format!("nodal × line: {} = {} + {}", s.lhs, s.transform_term, s.mu_delta),
        )?;
        Ok(format!("200 Bezout pairs ({line_pairs} line products); identity on {checked} corpus pairs; 3 = 1 + 2"))
    })
}

fn c7() -> Outcome {
    timed(Duration::from_secs(1), || {
        let node = e(family_derivative_check(&fixtures::moving_node_family(), 5))?;
        let cusp = e(family_derivative_check(&fixtures::moving_cusp_family(), 5))?;
        ensure(node.holds() && cusp.holds(), "derivative check failed")?;
        Ok("translated node and cusp".to_string())
    })
}

fn c8() -> Outcome {
    timed(Duration::from_secs(5), || {
        for (a, b) in [(int(-3), int(0)), (int(-4), int(0))] {
            let r = e(flex_pencil_count(&WeierstrassData::normal(a.clone(), b)))?;
            ensure(
                r.count == 2 && r.kinds == [MemberKind::Node, MemberKind::Node],
                format!("α = {a}: {} members {:?}", r.count, r.kinds),
            )?;
        }
        let r = e(flex_pencil_count(&WeierstrassData::normal(int(0), ratio(-1, 4))))?;
        ensure(r.count == 1 && r.kinds == [MemberKind::Cusp], format!("α = 0: {:?}", r.kinds))?;
        Ok("α ≠ 0: two nodes; α = 0: one cusp".to_string())
    })
}

fn c9() -> Outcome {
    timed(Duration::from_secs(10), || {
        let general = e(unisecant_count_k3(&fixtures::weierstrass_square()))?;
        let fermat = e(unisecant_count_k3(&fixtures::fermat()))?;
        ensure(general.total == 306, format!("j = {}: {}", general.j, general.total))?;
        ensure(fermat.total == 297, format!("Fermat: {}", fermat.total))?;
        Ok("306 (j = 1728), 297 (Fermat)".to_string())
    })
}

fn exact_order(w: &WeierstrassData, p: &AffineECPoint, n: i64) -> Result<bool, String> {
    let mut ok = e(ec_scalar_mul(w, n, p))? == AffineECPoint::Infinity;
    for d in 1..n {
        if n % d == 0 {
            ok &= e(ec_scalar_mul(w, d, p))? != AffineECPoint::Infinity;
        }
    }
    Ok(ok)
}

fn c10() -> Outcome {
    timed(Duration::from_secs(120), || {
        let f = fixtures::kubert9();
        let p = ProjectivePoint::from_ints(0, 0, 1);
        let w = e(weierstrass_at_flex(&f, &ProjectivePoint::from_ints(0, 1, 0)))?;
        ensure(exact_order(&w, &e(w.to_affine(&p))?, 9)?, "P does not have order 9")?;
        let acc = e(nonflex_fiber_accounting(&f, &p))?;
        ensure(acc.report.discriminant.degree == 12, "degree")?;
        let pattern = acc.report.multiplicity_pattern();
        ensure(pattern == [9, 1, 1, 1], format!("pattern {pattern:?}"))?;
        ensure(acc.multiplicity_at_member() == 9, "9-fold root is not the member singular at P")?;
        ensure(acc.kind_at_point == MemberKind::Node, format!("{} at P", acc.kind_at_point))?;
        Ok("multiplicities {9, 1, 1, 1}, node at P".to_string())
    })
}

fn c11() -> Outcome {
    timed(Duration::from_secs(5), || {
        let f = fixtures::kubert6();
        let p = ProjectivePoint::from_ints(0, 0, 1);
        let o = ProjectivePoint::from_ints(0, 1, 0);
        let w = e(weierstrass_at_flex(&f, &o))?;
        ensure(exact_order(&w, &e(w.to_affine(&p))?, 6)?, "P does not have order 6")?;
        let (k, _) = e(contact_conic_check(&f, &p))?;
        ensure(k == ConicKind::IrreducibleConic, format!("order 6: {}", k.as_str()))?;
        let (k, _) = e(contact_conic_check(&f, &o))?;
        ensure(k == ConicKind::DoubleLine, format!("flex: {}", k.as_str()))?;
        Ok("order 6: irreducible conic; flex: double line".to_string())
    })
}

fn c12() -> Outcome {
    timed(Duration::from_secs(1), || {
        ensure((1..=10).all(|k| genus_bound(3, k) == int(1)), "genus bound")?;
        let (sq, mu, ac) = e(lemma5_datum(&fixtures::nodal_cubic(), 3))?;
        ensure((sq, mu, ac) == (9, 2, 9), format!("datum ({sq}, {mu}, {ac})"))?;
        ensure(!lemma5_certificate(sq, mu, ac), "certificate should fail")?;
        Ok("bound 1 for k ≤ 10; 9 < 2 + 9".to_string())
    })
}

fn c13() -> Outcome {
    timed(Duration::from_secs(5), || {
        let j0 = e(j_invariant(&WeierstrassData::normal(int(0), ratio(-1, 4))))?;
        let j1728 = e(j_invariant(&WeierstrassData::normal(int(-4), int(0))))?;
        ensure(j0.is_zero() && j1728 == int(1728), "special values")?;
        let (a, b) = (int(-2), int(3));
        let j = e(j_invariant(&WeierstrassData::normal(a.clone(), b.clone())))?;
        let f = normal_form(&a, &b);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let mut done = 0;
        while done < 5 {
            let rows: [[i64; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| rng.gen_range(-3..=3)));
            let m = Matrix3::from_ints(rows);
            if m.det().is_zero() {
                continue;
            }
            let j2 = e(j_invariant(&e(weierstrass_any_flex(&f.substitute_linear(&m)))?))?;
            ensure(j2 == j, format!("j changed to {j2} under {rows:?}"))?;
            done += 1;
        }
        Ok(format!("0, 1728; j = {j} under 5 coordinate changes"))
    })
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("Kontsevich numbers", c1),
        ("contact counts", c2),
        ("primitive counts", c3),
        ("flexes", c4),
        ("genus engine", c5),
        ("Bezout and blow-up identity", c6),
        ("family derivative check", c7),
        ("flex pencils", c8),
        ("unisecant totals", c9),
        ("non-flex fiber accounting", c10),
        ("contact conics", c11),
        ("bounds", c12),
        ("j-invariant", c13),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = f();
        let el = start.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({el:.2}s): {detail}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({el:.2}s): {msg}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
