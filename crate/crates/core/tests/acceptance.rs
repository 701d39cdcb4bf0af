//! One pass/fail line per acceptance criterion. Run with
//! `cargo test --test acceptance`.

mod common;

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_ell::cech::{cech_poset, coho_witness, cover, cube_poset, reduce_complex, FiniteComplex, Letter, Splitting};
use toric_ell::corpus;
use toric_ell::ellinv::{compare_fans, ell_shadow, flip_certificate, Outcome, Witness};
use toric_ell::fan::{fan_isomorphic, Fan};
use toric_ell::lattice::{saturate, SublatticeClass};
use toric_ell::triang::{apply_flip, cone_fan, flop_example};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:?}, limit {limit:?}"))
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn corpus_fans() -> Vec<(String, Fan)> {
    corpus::builtin().into_iter().map(|(n, f)| (n.to_string(), f)).collect()
}

fn acc1() -> Check {
    let start = Instant::now();
    let fans = corpus_fans();
    for (name, f) in &fans {
        let s = ell_shadow(f).map_err(e)?;
        ensure(
            s.rank == f.top_cones().len(),
            format!("{name}: rank {} vs {} top cones", s.rank, f.top_cones().len()),
        )?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("{} fans, rank = #top cones", fans.len()))
}

fn acc2() -> Check {
    let start = Instant::now();
    let (x, x2) = corpus::surface_pair();
    let v = compare_fans(&x, &x2).map_err(e)?;
    ensure(v.outcome == Outcome::Isomorphic, format!("verdict {:?}", v.outcome))?;
    ensure(
        matches!(v.witness, Witness::RayBijection { ref pairs } if pairs.len() == 6),
        "no full ray bijection",
    )?;
    ensure(fan_isomorphic(&x, &x2).map_err(e)?.is_none(), "fans are isomorphic")?;
    within(start, Duration::from_secs(1))?;
    Ok("surface pair: ISOMORPHIC, fans not isomorphic".into())
}

fn acc3() -> Check {
    let start = Instant::now();
    let ex = flop_example();
    let (a, b) = (cone_fan(&ex.source).map_err(e)?, cone_fan(&ex.target).map_err(e)?);
    for f in [&a, &b] {
        ensure(f.is_smooth() && f.is_good(), "resolution is not smooth and good")?;
        // crepant: every ray is a point of Δ at height one
        ensure(
            f.rays()
                .iter()
                .all(|r| r.last().map(|h| h == &1.into()).unwrap_or(false)),
            "ray off height one",
        )?;
    }
    let (flipped, cert) = apply_flip(&ex.source, &ex.flip).map_err(e)?;
    ensure(
        flipped == ex.target && cert.moves.len() == 1 && cert.verify().map_err(e)?,
        "certificate does not connect the two",
    )?;
    let v = compare_fans(&a, &b).map_err(e)?;
    ensure(v.outcome == Outcome::NotIsomorphic, format!("verdict {:?}", v.outcome))?;
    let span = |d: [usize; 2]| -> Result<SublatticeClass, String> {
        saturate(&[ex.simplex.ray(d[0]), ex.simplex.ray(d[1])], 3).map_err(e)
    };
    let expected = Witness::SpanMismatch {
        only_left: vec![span(ex.flip.diagonal_before)?],
        only_right: vec![span(ex.flip.diagonal_after)?],
    };
    ensure(v.witness == expected, format!("witness {:?}", v.witness))?;
    within(start, Duration::from_secs(1))?;
    Ok("flop pair: one flip, NOT_ISOMORPHIC on the flopped wall".into())
}

fn acc4() -> Check {
    let p1 = cover(&corpus::projective_line()).map_err(e)?;
    ensure(p1.len() == 3, format!("|U_P1| = {}", p1.len()))?;
    let p2 = cover(&corpus::projective_plane()).map_err(e)?;
    let mut profile: Vec<usize> = p2.iter().map(|x| x.support.len()).collect();
    profile.sort_unstable();
    ensure(
        profile == vec![1, 1, 1, 2, 2, 2, 3],
        format!("P2 support profile {profile:?}"),
    )?;
    Ok("|U_P1| = 3, |U_P2| = 7 with profile 3,2,2,2,1,1,1".into())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn acc5() -> Check {
    for n in 0..=6 {
        let j = cube_poset(n);
        ensure(
            j.words.len() == 3usize.pow(n as u32),
            format!("n={n}: |J| = {}", j.words.len()),
        )?;
        let counts = j.grade_counts();
        for (k, &c) in counts.iter().enumerate() {
            let want = binomial(n, k) * 2usize.pow((n - k) as u32);
            ensure(c == want, format!("n={n}, k={k}: {c} vs {want}"))?;
        }
    }
    Ok("|J| = 3^n and |J_k| = C(n,k) 2^(n-k) for n <= 6".into())
}

fn acc6() -> Check {
    let mut count = 0;
    for (name, f) in corpus_fans() {
        if !f.is_good() {
            continue;
        }
        let w = coho_witness(&f).map_err(|x| format!("{name}: {x}"))?;
        ensure(w.success, format!("{name}: witness failed"))?;
        count += 1;
    }
    let f = corpus::projective_line();
    let poset = cech_poset(&f).map_err(e)?;
    let w = coho_witness(&f).map_err(e)?;
    ensure(
        w.entries.len() == 1,
        "P1 should have one singular open in the top-but-one grade",
    )?;
    let entry = &w.entries[0];
    let show = |i: usize| poset.elements[i].describe();
    ensure(
        show(entry.element) == "[0:a 1:a]",
        format!("singular element {}", show(entry.element)),
    )?;
    // each point component extends constantly over the b-open on its own ray
    for (&ci, &si) in entry.components.iter().zip(&entry.smooth_covers) {
        let (c, s) = (&poset.elements[ci], &poset.elements[si]);
        ensure(
            c.face == s.face && c.face.len() == 1,
            format!("{} not matched with {}", c.describe(), s.describe()),
        )?;
        ensure(
            c.labels == [Letter::C] && s.labels == [Letter::B],
            "labels are not c under b",
        )?;
        ensure(poset.leq(ci, si), "component not inside its cover")?;
    }
    Ok(format!("witness found on {count} good fans; P1 matches c_i into b_i"))
}

fn acc7() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    while done < 200 {
        let (dims, ds) = common::random_complex(&mut rng);
        let want = common::oracle_homology(&dims, &ds);
        let c = FiniteComplex::new(dims.clone(), ds.clone()).map_err(e)?;
        let Some(i) = (0..ds.len()).find(|&k| !ds[k].is_zero()) else {
            continue;
        };
        let (k_source, k_target) = common::random_unit_block(&ds[i], &mut rng).expect("nonzero differential");
        let reduced = reduce_complex(&c, i, &Splitting { k_source, k_target }).map_err(e)?;
        let got = common::oracle_homology(
            reduced.dims(),
            &(0..reduced.dims().len() - 1)
                .map(|k| reduced.differential(k).clone())
                .collect::<Vec<_>>(),
        );
        ensure(
            got == want,
            format!("complex {dims:?}: homology {want:?} became {got:?}"),
        )?;
        done += 1;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!("{done} random complexes keep their homology"))
}

fn acc8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let n = 12;
    for t in 0..n {
        let (x, x2) = common::random_reversal_pair(&mut rng);
        let cert = flip_certificate(&x, &x2).map_err(|m| format!("pair {t}: {m}"))?;
        let det = cert.matrix.determinant().map_err(e)?;
        ensure(common::is_unit(&det), format!("pair {t}: det {det}"))?;
        let rhs = cert.target.map_matrix().mul(&cert.matrix).map_err(e)?;
        ensure(rhs == cert.source.map_matrix(), format!("pair {t}: A_X != A_X' M"))?;
    }
    Ok(format!("{n} random reversal pairs: |det M| = 1 and A_X = A_X' M"))
}

fn acc9() -> Check {
    let fans = corpus_fans();
    for (name, f) in &fans {
        let s = ell_shadow(f).map_err(e)?;
        let walls = f.interior_walls().map_err(e)?.len() as i64;
        ensure(
            s.det_degree() == -walls,
            format!("{name}: degree {} vs {} interior walls", s.det_degree(), walls),
        )?;
    }
    Ok(format!("{} fans: deg det = -#interior walls", fans.len()))
}

fn acc10() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let fans = corpus_fans();
    let mut pairs = Vec::new();
    for (i, (n1, f)) in fans.iter().enumerate() {
        for (n2, g) in &fans[i..] {
            if f.ambient_rank() != g.ambient_rank() {
                continue;
            }
            let v = compare_fans(f, g).map_err(e)?;
            let iso = fan_isomorphic(f, g).map_err(e)?.is_some();
            ensure(
                !(iso && v.outcome == Outcome::NotIsomorphic),
                format!("{n1} vs {n2}: isomorphic fans judged NOT_ISOMORPHIC"),
            )?;
            pairs.push((f.clone(), g.clone(), v.outcome));
        }
    }
    let corpus_pairs = pairs.len();
    for _ in 0..6 {
        let (x, x2) = common::random_reversal_pair(&mut rng);
        let v = compare_fans(&x, &x2).map_err(e)?;
        pairs.push((x, x2, v.outcome));
    }
    let shuffles = 600;
    for s in 0..shuffles {
        let (f, g, outcome) = &pairs[s % pairs.len()];
        let (f2, g2) = (common::shuffle_fan(f, &mut rng), common::shuffle_fan(g, &mut rng));
        let v = compare_fans(&f2, &g2).map_err(e)?;
        ensure(
            v.outcome == *outcome,
            format!("shuffle {s}: {outcome:?} became {:?}", v.outcome),
        )?;
        let back = compare_fans(&g2, &f2).map_err(e)?;
        ensure(back.outcome == *outcome, format!("shuffle {s}: not symmetric"))?;
        let same = compare_fans(f, &f2).map_err(e)?;
        ensure(
            same.outcome != Outcome::NotIsomorphic,
            format!("shuffle {s}: relabelled fan judged NOT_ISOMORPHIC"),
        )?;
    }
    Ok(format!(
        "{corpus_pairs} corpus pairs sound, {shuffles} shuffles invariant"
    ))
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let checks: [Criterion; 10] = [
        ("rank law", acc1),
        ("surface pair", acc2),
        ("flop witness", acc3),
        ("cover counts", acc4),
        ("cube poset", acc5),
        ("cohomology witness", acc6),
        ("complex reduction", acc7),
        ("certificate algebra", acc8),
        ("determinant degree", acc9),
        ("soundness", acc10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        match check() {
            Ok(detail) => println!("[PASS] ACC{} {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] ACC{} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", checks.len() - failed, checks.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
