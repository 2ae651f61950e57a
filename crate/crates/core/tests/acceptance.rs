//! End-to-end acceptance gate. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::process::ExitCode;

use hbk_core::catalog::Catalog;
use hbk_core::{
    census, cf_eval, cf_expand, chirality, endpoint_pairing, equivalent, equivalent_up_to_mirror,
    exterior_homeomorphic, matrix_oracle_eval, mirror, mirror_spec, parse_spec, star,
    symmetry_group, validate_rational, AnnulusCount, ChiralityVerdict, CompositeTau, Descriptor,
    ExteriorStatus, Fraction, Handedness, HbkSpec, Integer, KnotLabel, RationalTau, Status,
    SymmetryGroup, TauTangle, VertexLabel, Word, Word64,
};
use num_integer::Integer as _;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn frac(n: i64, d: i64) -> Fraction {
    Fraction::new(n.into(), d.into()).unwrap()
}

fn spec(text: &str) -> HbkSpec {
    parse_spec(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

fn catalog_spec(cat: &Catalog, name: &str) -> HbkSpec {
    cat.lookup(name).unwrap().spec.clone().unwrap()
}

fn census_trichotomy() -> Check {
    let infinite = [(1, 3), (2, 3)];
    let two = [(1, 5), (4, 5), (1, 7), (6, 7), (1, 9), (8, 9)];
    let mut n = 0;
    for q in (3..=9i64).step_by(2) {
        for p in (1..q).filter(|p| p.gcd(&q) == 1) {
            let c = census(&spec(&format!("k:0;rational:x:{p}/{q}"))).map_err(|e| e.to_string())?;
            let want = if infinite.contains(&(p, q)) {
                AnnulusCount::InfinitelyMany
            } else if two.contains(&(p, q)) {
                AnnulusCount::Two
            } else {
                AnnulusCount::One
            };
            ensure(c.count == want, || {
                format!("{p}/{q}: got {}, want {want}", c.count)
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} classes"))
}

fn slopes() -> Check {
    let mut n = 0;
    for k in -2i64..=2 {
        for m in [5i64, -5, 7, -7, 9, -9] {
            let c = census(&spec(&format!("k:{k};rational:x:1/{m}"))).map_err(|e| e.to_string())?;
            let mut want = vec![frac(2 * k - 1, 2), frac(8 * k + m - 4, 2)];
            want.sort();
            ensure(c.slopes == want, || format!("(k={k}, n={m}): got {c}"))?;
            n += 1;
        }
    }
    let spots = [
        ((0, 5), [frac(-1, 2), frac(1, 2)]),
        ((0, 7), [frac(-1, 2), frac(3, 2)]),
        ((1, 5), [frac(1, 2), frac(9, 2)]),
        ((0, -5), [frac(-9, 2), frac(-1, 2)]),
    ];
    for ((k, m), want) in spots {
        let c = census(&spec(&format!("k:{k};rational:x:1/{m}"))).unwrap();
        ensure(c.slopes == want, || format!("spot (k={k}, n={m}): got {c}"))?;
    }
    Ok(format!("{n} (k, n) pairs, 4 spot values"))
}

fn twisted_pairs(cat: &Catalog) -> Check {
    for (a, b) in [("6_12", "7_39"), ("7_59", "7_60")] {
        let (sa, sb) = (catalog_spec(cat, a), catalog_spec(cat, b));
        let eq = equivalent(&sa, &sb).map_err(|e| e.to_string())?;
        ensure(eq.status == Status::Inequivalent, || {
            format!("{a}/{b} equiv: {eq}")
        })?;
        let um = equivalent_up_to_mirror(&sa, &sb).map_err(|e| e.to_string())?;
        ensure(um.status == Status::Inequivalent, || {
            format!("{a}/{b} up to mirror: {um}")
        })?;
        let ext = exterior_homeomorphic(&sa, &sb);
        ensure(ext.status == ExteriorStatus::True, || {
            format!("{a}/{b} exterior: {}", ext.reason)
        })?;
    }
    Ok("6_12/7_39 and 7_59/7_60".to_string())
}

fn symmetry(cat: &Catalog) -> Check {
    let want = [
        ("6_12", SymmetryGroup::Z2),
        ("7_36", SymmetryGroup::Z2),
        ("7_38", SymmetryGroup::Z2),
        ("7_39", SymmetryGroup::Z2),
        ("7_59", SymmetryGroup::Z1),
        ("7_60", SymmetryGroup::Z1),
    ];
    for (name, g) in want {
        let got = symmetry_group(&catalog_spec(cat, name));
        ensure(got == g, || format!("{name}: got {got}, want {g}"))?;
    }
    let s = cat.verify_all();
    ensure(s.is_clean(), || {
        format!("verify_all: {} failures", s.failed)
    })?;
    Ok(format!(
        "6 groups; verify_all {} passed, {} skipped, {} literature-only entries",
        s.passed,
        s.skipped,
        s.skipped_entries.len()
    ))
}

fn chirality_check(cat: &Catalog) -> Check {
    for name in ["6_12", "7_59"] {
        let got = chirality(&catalog_spec(cat, name)).map_err(|e| e.to_string())?;
        ensure(got == ChiralityVerdict::Chiral, || format!("{name}: {got}"))?;
    }
    Ok("6_12, 7_59".to_string())
}

fn one_third_separation() -> Check {
    let (a, b) = (spec("k:0;rational:x:1/3"), spec("k:0;rational:x:2/3"));
    let v = equivalent(&a, &b).map_err(|e| e.to_string())?;
    ensure(v.status == Status::Inequivalent, || v.to_string())?;
    for s in [&a, &b] {
        let c = census(s).unwrap();
        ensure(c.count == AnnulusCount::InfinitelyMany, || {
            format!("{s}: {c}")
        })?;
    }
    Ok(v.to_string())
}

fn oracles() -> Check {
    let mut rng = StdRng::seed_from_u64(0x4_1);
    for _ in 0..1000 {
        let len = rng.gen_range(0..=12);
        let w = Word::new(
            (0..len)
                .map(|_| Integer::from(rng.gen_range(-20..=20)))
                .collect(),
        );
        let (a, b) = (cf_eval(&w), matrix_oracle_eval(&w));
        ensure(a == b, || format!("{w}: {a:?} vs {b:?}"))?;
    }
    let mut n = 0;
    for q in 1..=50i64 {
        for p in (-50..=50i64).filter(|p| p.gcd(&q) == 1) {
            let r = frac(p, q);
            let back = cf_expand(&r).and_then(|w| cf_eval(&w));
            ensure(back.as_ref() == Ok(&r), || format!("{r}: {back:?}"))?;
            n += 1;
        }
    }
    Ok(format!("1000 random words, {n} round trips"))
}

fn parity_law() -> Check {
    let (mut checked, mut bad) = (0usize, Vec::new());
    for len in 0..=8u32 {
        for mut code in 0..7u64.pow(len) {
            let entries = (0..len)
                .map(|_| {
                    let a = (code % 7) as i64 - 3;
                    code /= 7;
                    a
                })
                .collect();
            let w = Word64::new(entries);
            let Ok(r) = cf_eval(&w) else { continue };
            if endpoint_pairing(&w).is_cone() != (r.denom() % 2 == 1) {
                bad.push(w.to_string());
            }
            checked += 1;
        }
    }
    ensure(bad.is_empty(), || {
        format!("{} counterexamples, first {}", bad.len(), bad[0])
    })?;
    Ok(format!("{checked} finite words, 0 counterexamples"))
}

fn random_descriptor(rng: &mut StdRng) -> Descriptor {
    Descriptor {
        id: "d".to_string(),
        mirrored: rng.gen(),
        starred: rng.gen(),
    }
}

fn random_tangle(rng: &mut StdRng) -> TauTangle {
    let vertex = *[VertexLabel::X, VertexLabel::Y, VertexLabel::Z]
        .choose(rng)
        .unwrap();
    match rng.gen_range(0..3) {
        0 => loop {
            let q = 2 * rng.gen_range(1..=10) + 1;
            let p = rng.gen_range(-40..=40);
            if let Ok(t) = validate_rational(vertex, &frac(p, q)) {
                break t;
            }
        },
        1 => TauTangle::Rational(RationalTau::unrecorded(vertex, random_descriptor(rng))),
        _ => {
            let hand = *[Handedness::Plus, Handedness::Minus, Handedness::Amphichiral]
                .choose(rng)
                .unwrap();
            let v = if rng.gen() { Some(vertex) } else { None };
            let knots = vec![KnotLabel::new("trefoil", hand)];
            TauTangle::Composite(CompositeTau::new(v, knots, true, random_descriptor(rng)))
        }
    }
}

fn random_rational_spec(rng: &mut StdRng, q_max: i64) -> HbkSpec {
    let k = rng.gen_range(-3..=3);
    loop {
        let q = 2 * rng.gen_range(1..=q_max) + 1;
        let p = rng.gen_range(-3 * q..=3 * q);
        if let Ok(t) = validate_rational(VertexLabel::X, &frac(p, q)) {
            return HbkSpec::new(k, t).unwrap();
        }
    }
}

fn algebra() -> Check {
    let mut rng = StdRng::seed_from_u64(500);
    for _ in 0..500 {
        let t = random_tangle(&mut rng);
        ensure(mirror(&mirror(&t)) == t, || format!("mirror^2 on {t}"))?;
        ensure(star(&star(&t)) == t, || format!("star^2 on {t}"))?;
        ensure(star(&mirror(&t)) == mirror(&star(&t)), || {
            format!("star/mirror on {t}")
        })?;
    }
    // small denominators so that equivalent pairs actually occur
    let mut hits = 0;
    for _ in 0..500 {
        let (a, b) = (
            random_rational_spec(&mut rng, 2),
            random_rational_spec(&mut rng, 2),
        );
        if equivalent(&a, &b).unwrap().status == Status::Equivalent {
            hits += 1;
            let (ca, cb) = (census(&a).unwrap(), census(&b).unwrap());
            ensure(ca == cb, || format!("{a} ~ {b} but {ca} vs {cb}"))?;
        }
    }
    let mut finite = 0;
    for k in -3i64..=3 {
        for q in (3..=9i64).step_by(2) {
            for p in (-q..=q).filter(|p| p.gcd(&q) == 1) {
                let s = spec(&format!("k:{k};rational:x:{p}/{q}"));
                let c = census(&s).unwrap();
                if c.count == AnnulusCount::InfinitelyMany {
                    continue;
                }
                let m = census(&mirror_spec(&s)).unwrap();
                let mut neg: Vec<Fraction> = c.slopes.iter().map(|v| -v).collect();
                neg.sort();
                ensure(neg == m.slopes, || format!("{s}: {c} vs mirror {m}"))?;
                finite += 1;
            }
        }
    }
    Ok(format!(
        "500 tangles, 500 pairs ({hits} equivalent), {finite} mirrored specs"
    ))
}

fn main() -> ExitCode {
    let cat = Catalog::shipped();
    let criteria: Vec<Criterion> = vec![
        ("census trichotomy", Box::new(census_trichotomy)),
        ("annulus slopes", Box::new(slopes)),
        (
            "twisted pairs inequivalent, exteriors homeomorphic",
            Box::new(|| twisted_pairs(&cat)),
        ),
        (
            "symmetry groups and catalog verification",
            Box::new(|| symmetry(&cat)),
        ),
        ("chirality", Box::new(|| chirality_check(&cat))),
        ("5_2 / 6_13 separation", Box::new(one_third_separation)),
        ("oracle equivalence", Box::new(oracles)),
        ("connectivity-parity law", Box::new(parity_law)),
        ("algebraic properties", Box::new(algebra)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{}] {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
