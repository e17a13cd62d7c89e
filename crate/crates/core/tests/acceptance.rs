//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always show up in `cargo test` output.

use std::process::ExitCode;
use std::time::Instant;

use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use subdivision_spectra::closed_form::{
    complete_subdivision_charpoly, complete_subdivision_kpq, complete_subdivision_tstars, lspec_kpp_family,
    lspec_merged, partitioned_char_poly_at, path_poly_adjacency, path_polynomial_spectrum,
    q_complemented_aspec_line_regular, q_complemented_charpoly, q_complemented_kpq, star_spectra,
    block_eigenvalues, KppRole, MergedVariant, ParamTriple, RegularPairContext,
};
use subdivision_spectra::constructions::{merged_laplacian_blocks, merged_subdivision, MergedTriple, NamedOp};
use subdivision_spectra::exact::{char_poly, coronal, q, q_frac, ExactPolynomial, RationalFunction};
use subdivision_spectra::invariants::{
    kf_star, kf_star_exact, tau_closed_as_printed, tau_closed_exact, tau_star, verify_invariants, InvariantForm,
    Quantity,
};
use subdivision_spectra::io::graph_arg;
use subdivision_spectra::numeric::{compare_spectra, eigen_symmetric, eigenvalues_of};
use subdivision_spectra::suite::{param_block_matrix, regular_pair_catalog};
use subdivision_spectra::{Error, Graph, IntMatrix, MatrixKind};

type Outcome = Result<String, String>;

const SPEC_TOL: f64 = 1e-8;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn g(spec: &str) -> Result<Graph, String> {
    graph_arg(spec).map_err(|e| format!("{spec}: {e}"))
}

fn ok<T>(r: subdivision_spectra::Result<T>, what: &str) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

/// Compares two multisets and returns the largest residual.
fn same(closed: &[f64], oracle: &[f64], tol: f64, what: &str) -> Result<f64, String> {
    let rep = ok(compare_spectra(closed, oracle, tol), what)?;
    ensure!(rep.matched, "{what}: residual {:.3e} above {tol:e}", rep.max_abs_residual);
    Ok(rep.max_abs_residual)
}

fn is_hypothesis(e: &Error) -> bool {
    matches!(e, Error::Hypothesis(_) | Error::NotRegular(_))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).expect("valid edges")
}

fn criterion_construction_law() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut done = 0;
    while done < 100 {
        let n = rng.gen_range(2..=8);
        let base = random_graph(&mut rng, n, 0.5);
        let m = base.size();
        if m == 0 {
            continue;
        }
        let (p1, p2) = (rng.gen_range(0.0..1.0), rng.gen_range(0.0..1.0));
        let h1 = random_graph(&mut rng, n, p1);
        let h2 = random_graph(&mut rng, m, p2);
        let (m1, m2) = (h1.size(), h2.size());
        let t = ok(MergedTriple::new(base, h1, h2), "triple")?;
        let built = ok(merged_subdivision(&t), "construction")?;
        ensure!(built.order() == n + m, "order {} != {}", built.order(), n + m);
        ensure!(built.size() == 2 * m + m1 + m2, "size {} != {}", built.size(), 2 * m + m1 + m2);
        let blocks = ok(merged_laplacian_blocks(&t), "blocks")?.assemble();
        ensure!(blocks == built.laplacian(), "block Laplacian differs on triple {done}");
        done += 1;
    }
    Ok(format!("{done} random triples, |V|, |E| and block Laplacian exact"))
}

fn criterion_block_theorem() -> Outcome {
    let triples = [
        ParamTriple::new(q_frac(1, 2), q(-1), q(3)),
        ParamTriple::new(q(3), q_frac(1, 3), q(-2)),
    ];
    let (mut cases, mut worst) = (0, 0.0f64);
    for (gs, hs) in regular_pair_catalog() {
        let (base, h) = (g(&gs)?, g(&hs)?);
        let ctx = ok(RegularPairContext::new(&base, &h), &format!("{gs} / {hs}"))?;
        for t in &triples {
            let closed = ok(block_eigenvalues(&ctx, t), "block eigenvalues")?;
            let oracle = eigen_symmetric(&ok(param_block_matrix(&base, &h, t), "block matrix")?).values;
            worst = worst.max(same(&closed, &oracle, SPEC_TOL, &format!("block {gs} / {hs}"))?);
            cases += 1;
        }
        for v in MergedVariant::ALL {
            let closed = ok(lspec_merged(&ctx, v), "merged spectrum")?;
            let oracle = eigenvalues_of(&ok(v.construct(&base, &h), "construction")?, MatrixKind::Laplacian);
            worst = worst.max(same(&closed, &oracle, SPEC_TOL, &format!("{} {gs} / {hs}", v.name()))?);
            cases += 1;
        }
    }
    let ctx = ok(RegularPairContext::new(&g("cycle:4")?, &g("empty:4")?), "C4")?;
    let s = 2f64.sqrt();
    let spot = [0.0, 2.0 - s, 2.0 - s, 2.0, 2.0, 2.0 + s, 2.0 + s, 4.0];
    same(&ok(lspec_merged(&ctx, MergedVariant::Plain), "spot")?, &spot, SPEC_TOL, "C4 plain spot")?;
    Ok(format!("{cases} spectra, max residual {worst:.2e}, C4 spot value ok"))
}

fn criterion_kpp() -> Outcome {
    let variants = [MergedVariant::Plain, MergedVariant::CompleteKm, MergedVariant::LineComplement];
    let (mut cases, mut refused, mut worst) = (0, 0, 0.0f64);
    for p in 2..=4 {
        let kpp = g(&format!("complete_bipartite:{p},{p}"))?;
        for hs in [format!("matching:{p}"), format!("crown:{p}"), format!("complete_bipartite:{p},{p}")] {
            let h = g(&hs)?;
            for role in [KppRole::Base, KppRole::Overlay] {
                for v in variants {
                    let what = format!("p={p} {hs} {} {}", role.name(), v.name());
                    let closed = match lspec_kpp_family(p, &h, v, role) {
                        Ok(c) => c,
                        Err(e) if role == KppRole::Overlay && h.is_regular() < Some(2) && is_hypothesis(&e) => {
                            refused += 1;
                            continue;
                        }
                        Err(e) => return Err(format!("{what}: {e}")),
                    };
                    let built = match role {
                        KppRole::Base => v.construct(&kpp, &h),
                        KppRole::Overlay => v.construct(&h, &kpp),
                    };
                    let oracle = eigenvalues_of(&ok(built, &what)?, MatrixKind::Laplacian);
                    worst = worst.max(same(&closed, &oracle, SPEC_TOL, &what)?);
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} spectra, max residual {worst:.2e}, {refused} degree-1 overlays refused"))
}

fn star_graph(h: &Graph) -> Result<Graph, String> {
    ok(InvariantForm::Star { h: h.clone() }.construct(), "star construction")
}

fn criterion_star() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut cases, mut irregular, mut worst) = (0, 0, 0.0f64);
    for m in 2..=8 {
        let mut hs = vec![g(&format!("empty:{m}"))?, g(&format!("complete:{m}"))?];
        if m >= 3 {
            hs.push(g(&format!("cycle:{m}"))?);
        }
        for h in &hs {
            let built = star_graph(h)?;
            for kind in [MatrixKind::Adjacency, MatrixKind::Laplacian] {
                let closed = ok(star_spectra(m, h, kind), "star")?;
                worst = worst.max(same(&closed, &eigenvalues_of(&built, kind), SPEC_TOL, &format!("star m={m}"))?);
                cases += 1;
            }
        }
        // every graph on 2 vertices is regular
        let mut found = 0;
        while m >= 3 && found < 5 {
            let h = random_graph(&mut rng, m, 0.5);
            if h.is_regular().is_some() {
                continue;
            }
            let closed = ok(star_spectra(m, &h, MatrixKind::Laplacian), "irregular star")?;
            let oracle = eigenvalues_of(&star_graph(&h)?, MatrixKind::Laplacian);
            worst = worst.max(same(&closed, &oracle, SPEC_TOL, &format!("irregular star m={m}"))?);
            found += 1;
            irregular += 1;
        }
    }
    let s5 = 5f64.sqrt();
    let spot = [0.0, (5.0 + s5) / 2.0, (5.0 - s5) / 2.0, (3.0 + s5) / 2.0, (3.0 - s5) / 2.0];
    let closed = ok(star_spectra(2, &g("empty:2")?, MatrixKind::Laplacian), "spot")?;
    same(&closed, &spot, SPEC_TOL, "K_{1,2} spot")?;
    same(&closed, &eigenvalues_of(&g("path:5")?, MatrixKind::Laplacian), SPEC_TOL, "P5")?;
    Ok(format!(
        "{cases} spectra plus {irregular} irregular H, max residual {worst:.2e}, spot equals L(P5)"
    ))
}

fn criterion_path() -> Outcome {
    let (mut cases, mut worst) = (0, 0.0f64);
    for n in 3..=10 {
        for i in 0..=((n - 1) / 2 - 1) {
            let a = ok(path_poly_adjacency(n, i), &format!("n={n} i={i}"))?;
            let binary = a.entries().iter().all(|&x| x == 0 || x == 1);
            ensure!(binary && a.is_symmetric() && a.trace() == 0, "n={n} i={i}: not an adjacency matrix");
            let h = ok(Graph::from_adjacency(&a), "H")?;
            let t = ok(MergedTriple::new(g(&format!("path:{n}"))?, ok(Graph::empty(n), "H1")?, h), "triple")?;
            let oracle = eigenvalues_of(&ok(merged_subdivision(&t), "construction")?, MatrixKind::Adjacency);
            let closed = ok(path_polynomial_spectrum(n, i), "path spectrum")?;
            worst = worst.max(same(&closed, &oracle, SPEC_TOL, &format!("path n={n} i={i}"))?);
            cases += 1;
        }
    }
    Ok(format!("{cases} (n, i) pairs, max residual {worst:.2e}"))
}

fn adjacency_of(op: NamedOp, base: &Graph) -> Result<IntMatrix, String> {
    Ok(ok(op.apply(base, None), op.name())?.adjacency())
}

fn criterion_q_complemented() -> Outcome {
    let mut worst = 0.0f64;
    for gs in ["cycle:4", "cycle:5", "complete:4", "complete_bipartite:2,3"] {
        let base = g(gs)?;
        let a = adjacency_of(NamedOp::QComplemented, &base)?;
        let poly = ok(q_complemented_charpoly(&base), gs)?;
        ensure!(poly == ok(char_poly(&a), "oracle polynomial")?, "{gs}: polynomial differs");
        let oracle = eigenvalues_of(&ok(NamedOp::QComplemented.apply(&base, None), gs)?, MatrixKind::Adjacency);
        let roots = ok(poly.real_roots(), "roots")?;
        worst = worst.max(same(&roots, &oracle, SPEC_TOL, &format!("{gs} roots"))?);
        let closed = ok(q_complemented_aspec_line_regular(&base), gs)?;
        worst = worst.max(same(&closed, &oracle, SPEC_TOL, &format!("{gs} line-regular"))?);
    }
    for (p, qq) in [(2, 2), (2, 3), (3, 3), (2, 4)] {
        let base = g(&format!("complete_bipartite:{p},{qq}"))?;
        let oracle = eigenvalues_of(&ok(NamedOp::QComplemented.apply(&base, None), "K_{p,q}")?, MatrixKind::Adjacency);
        let closed = ok(q_complemented_kpq(p, qq), "kpq")?;
        worst = worst.max(same(&closed, &oracle, SPEC_TOL, &format!("K_{{{p},{qq}}}"))?);
    }
    let s17 = 17f64.sqrt();
    let spot = [0.0, 1.0, 1.0, 1.0, -2.0, -2.0, (1.0 + s17) / 2.0, (1.0 - s17) / 2.0];
    same(&ok(q_complemented_kpq(2, 2), "spot")?, &spot, SPEC_TOL, "K_{2,2} spot")?;
    Ok(format!("4 exact polynomials, 8 spectra, 4 K_{{p,q}}, max residual {worst:.2e}, spot ok"))
}

fn criterion_complete_subdivision() -> Outcome {
    let mut worst = 0.0f64;
    for t in 1..=4 {
        let base = g(&format!("t_copies_of_star:{t}"))?;
        let a = adjacency_of(NamedOp::CompleteSubdivision, &base)?;
        let poly = ok(complete_subdivision_charpoly(&base), "polynomial")?;
        ensure!(poly == ok(char_poly(&a), "oracle polynomial")?, "t={t}: polynomial differs");
        let oracle = eigenvalues_of(&ok(Graph::from_adjacency(&a), "graph")?, MatrixKind::Adjacency);
        worst = worst.max(same(&ok(complete_subdivision_tstars(t), "tstars")?, &oracle, SPEC_TOL, &format!("t={t}"))?);
    }
    for (p, qq) in [(2, 2), (2, 3), (3, 3)] {
        let base = g(&format!("complete_bipartite:{p},{qq}"))?;
        let a = adjacency_of(NamedOp::CompleteSubdivision, &base)?;
        let oracle = eigenvalues_of(&ok(Graph::from_adjacency(&a), "graph")?, MatrixKind::Adjacency);
        let closed = ok(complete_subdivision_kpq(p, qq), "kpq")?;
        worst = worst.max(same(&closed, &oracle, SPEC_TOL, &format!("K_{{{p},{qq}}}"))?);
    }
    match complete_subdivision_kpq(1, 2) {
        Err(e) if is_hypothesis(&e) => {}
        other => return Err(format!("K_{{1,2}} should be refused, got {other:?}")),
    }
    let one = ok(complete_subdivision_tstars(1), "t=1")?;
    let star = ok(star_spectra(2, &g("complete:2")?, MatrixKind::Adjacency), "star")?;
    same(&one, &star, 1e-10, "t=1 vs star")?;
    Ok(format!("4 star copies, 3 K_{{p,q}}, max residual {worst:.2e}, K_{{1,2}} refused, t=1 equals star"))
}

const INVARIANT_VARIANTS: [MergedVariant; 3] =
    [MergedVariant::Plain, MergedVariant::CompleteKm, MergedVariant::LineComplement];

fn catalog_invariants(quantity: Quantity) -> Result<(usize, f64), String> {
    let (mut cases, mut worst) = (0, 0.0f64);
    for (gs, hs) in regular_pair_catalog() {
        for v in INVARIANT_VARIANTS {
            let form = InvariantForm::Merged { variant: v, g: g(&gs)?, h: g(&hs)? };
            let what = format!("{} {gs} / {hs}", v.name());
            let res = ok(verify_invariants(quantity, &form), &what)?;
            ensure!(res.agrees, "{what}: closed form {} vs oracle {}", res.closed_form_exact, res.oracle_value);
            let target = subdivision_spectra::exact::q_to_f64(&res.oracle_value);
            let rel = (res.closed_form_value - target).abs() / target.abs().max(1.0);
            worst = worst.max(res.rounding_error.unwrap_or(0.0).max(rel));
            cases += 1;
        }
    }
    Ok((cases, worst))
}

fn criterion_tau() -> Outcome {
    let (cases, worst) = catalog_invariants(Quantity::Tau)?;
    let c4 = ok(RegularPairContext::new(&g("cycle:4")?, &g("empty:4")?), "C4")?;
    ensure!(ok(tau_closed_exact(&c4, MergedVariant::Plain), "C4")? == q(8), "C4 plain is not 8");
    let c3 = ok(RegularPairContext::new(&g("cycle:3")?, &g("empty:3")?), "C3")?;
    ensure!(ok(tau_closed_exact(&c3, MergedVariant::CompleteKm), "C3")? == q(54), "C3 complete-km is not 54");
    let from_one = ok(tau_closed_as_printed(&c3, MergedVariant::CompleteKm), "C3")?;
    ensure!((from_one - 324.0).abs() < 1e-6, "product from i=1 gives {from_one}, expected 324");
    ensure!(ok(tau_star(&g("complete:2")?), "star")? == 3.into(), "star with K2 is not 3");
    Ok(format!(
        "{cases} exact matches, max relative float error {worst:.2e}, spots 8, 54, 3 (324 from i=1)"
    ))
}

fn criterion_kirchhoff() -> Outcome {
    let (cases, worst) = catalog_invariants(Quantity::Kirchhoff)?;
    let h = g("empty:2")?;
    ensure!(ok(kf_star_exact(&h), "star")? == q(20), "Kf(P5) is not 20");
    ensure!((ok(kf_star(&h), "star")? - 20.0).abs() <= 1e-9 * 20.0, "floating Kf(P5) off");
    Ok(format!("{cases} exact matches, max relative float error {worst:.2e}, Kf(P5) = 20"))
}

fn k4_count(h: &Graph) -> usize {
    let n = h.order();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let vs = [a, b, c, d];
                    let all = vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| h.has_edge(u, v)));
                    count += usize::from(all);
                }
            }
        }
    }
    count
}

fn criterion_cospectral() -> Outcome {
    let (rook, shr) = (g("rook4x4")?, g("shrikhande")?);
    ensure!(k4_count(&rook) != k4_count(&shr), "rook4x4 and Shrikhande should be non-isomorphic");
    let mut cases = 0;
    for hs in ["empty:16", "complete:16", "self", "complement"] {
        let matched = |base: &Graph| match hs {
            "self" => Ok(base.clone()),
            "complement" => Ok(base.complement()),
            s => g(s),
        };
        let cr = ok(RegularPairContext::new(&rook, &matched(&rook)?), "rook")?;
        let cs = ok(RegularPairContext::new(&shr, &matched(&shr)?), "shrikhande")?;
        for v in MergedVariant::ALL {
            let a = ok(lspec_merged(&cr, v), "rook spectrum")?;
            let b = ok(lspec_merged(&cs, v), "shrikhande spectrum")?;
            same(&a, &b, SPEC_TOL, &format!("{} with H = {hs}", v.name()))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} variant/H combinations give identical spectra on non-isomorphic graphs"))
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    q_frac(rng.gen_range(-40..=40), rng.gen_range(1..=9))
}

/// Incidence matrix of a random loopless `r`-regular multigraph on `n`
/// vertices: constant row sum `r`, column sums `2`.
fn random_incidence(rng: &mut ChaCha8Rng, n: usize, r: usize) -> IntMatrix {
    loop {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat(v).take(r)).collect();
        stubs.shuffle(rng);
        let pairs: Vec<_> = stubs.chunks(2).map(|c| (c[0], c[1])).collect();
        if pairs.iter().any(|&(u, v)| u == v) {
            continue;
        }
        return IntMatrix::from_fn(n, pairs.len(), |i, e| i64::from(pairs[e].0 == i || pairs[e].1 == i));
    }
}

fn random_symmetric(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> IntMatrix {
    let mut rows = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i..n {
            let x = rng.gen_range(lo..=hi);
            rows[i][j] = x;
            rows[j][i] = x;
        }
    }
    IntMatrix::from_rows(&rows).expect("square")
}

fn criterion_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut instances = 0;
    while instances < 25 {
        let n = rng.gen_range(2..=8);
        let r = rng.gen_range(2..=n.min(4));
        if n * r % 2 == 1 {
            continue;
        }
        let b = random_incidence(&mut rng, n, r);
        let m = b.cols();
        let a = random_symmetric(&mut rng, n, -3, 3);
        let ts: Vec<i64> = (0..3).map(|_| rng.gen_range(-1..=2)).collect();
        let btb = ok(b.transpose().mul(&b), "BtB")?;
        let corner = ok(
            IntMatrix::identity(m).scale(ts[0]).add(&IntMatrix::ones(m, m).scale(ts[1])),
            "corner",
        )?;
        let corner = ok(corner.add(&btb.scale(ts[2])), "corner")?;
        let full = ok(IntMatrix::block(&a, &b, &b.transpose(), &corner), "M")?;
        let chi = ok(char_poly(&full), "char poly")?;
        let t = ParamTriple::from_ints(ts[0], ts[1], ts[2]);
        for _ in 0..20 {
            let x = random_rational(&mut rng);
            let reduced = ok(partitioned_char_poly_at(&a, &b, &t, &x), "partitioned")?;
            ensure!(chi.eval(&x) == reduced, "partitioned determinant differs at n={n} r={r} t={ts:?} x={x}");
        }
        instances += 1;
    }
    let mut coronals = 0;
    for _ in 0..25 {
        let n = rng.gen_range(1..=8);
        let mat = random_symmetric(&mut rng, n, -2, 2);
        let chi_m = ok(char_poly(&mat), "char poly")?;
        let cor = ok(coronal(&mat), "coronal")?;
        for alpha in [1i64, -1, 2] {
            let shifted = ok(mat.add(&IntMatrix::ones(n, n).scale(alpha)), "M + aJ")?;
            let lhs = RationalFunction::from_poly(ok(char_poly(&shifted), "shifted")?);
            let rhs = RationalFunction::from_poly(ExactPolynomial::one())
                .sub(&cor.scale(&q(alpha)))
                .mul(&RationalFunction::from_poly(chi_m.clone()));
            ensure!(lhs == rhs, "coronal identity fails for alpha={alpha} at order {n}");
            coronals += 1;
        }
    }
    Ok(format!(
        "{instances} partitioned determinants at 20 points each, {coronals} coronal identities, all exact"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("construction law", criterion_construction_law),
        ("block theorem and merged variants", criterion_block_theorem),
        ("K_{p,p} family", criterion_kpp),
        ("star", criterion_star),
        ("path polynomial", criterion_path),
        ("Q-complemented", criterion_q_complemented),
        ("complete subdivision", criterion_complete_subdivision),
        ("spanning trees", criterion_tau),
        ("Kirchhoff index", criterion_kirchhoff),
        ("cospectral rook4x4 / Shrikhande", criterion_cospectral),
        ("identity suites", criterion_identities),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.2}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed in {:.2}s",
        criteria.len() - failed,
        start.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
