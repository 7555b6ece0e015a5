//! Acceptance criteria, one line per criterion. Runs as a plain binary
//! (`harness = false`) and exits nonzero if any criterion fails.

use std::time::Instant;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use tensorcc::bench::{run_bench, BenchConfig};
use tensorcc::closed_forms::{
    cc_lower_bound, cc_upper_bound_check, product_global_cc, product_global_cc_exact,
    regular_product_cc_exact, srg_detect, srg_product_cc_exact, Relation, SrgParams, TOLERANCE,
};
use tensorcc::exact::{integer, ratio};
use tensorcc::generators::{
    complete, complete_bipartite, cycle, erdos_renyi, paley, petersen, Family,
};
use tensorcc::io::GraphSource;
use tensorcc::product::{tensor_product, Budget, PairEncoding};
use tensorcc::report::{verify_json, write_report};
use tensorcc::triangles::{
    global_cc, global_cc_exact, local_cc_exact, oracle_triangles, triangles_per_vertex,
};
use tensorcc::verify::verify;
use tensorcc::Graph;

const CORPUS_SEED: u64 = 0x7e25_0c0c;

struct Pair {
    label: String,
    g: Graph,
    h: Graph,
}

/// Pair `i` of the random corpus: n in [8, 14], p in [0.3, 0.7], both drawn
/// from a seeded stream together with the two graph seeds.
fn corpus_pair(i: u64) -> Pair {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ i.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut draw = || {
        let n = 8 + (rng.next_u64() % 7) as usize;
        let p = 0.3 + 0.4 * ((rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64);
        let seed = rng.next_u64();
        (n, p, seed, erdos_renyi(n, p, seed).unwrap())
    };
    let (ng, pg, sg, g) = draw();
    let (nh, ph, sh, h) = draw();
    Pair {
        label: format!("#{i} er:{ng},{pg:.3},{sg} x er:{nh},{ph:.3},{sh}"),
        g,
        h,
    }
}

fn min_deg_ok(p: &Pair) -> bool {
    p.g.min_degree().unwrap() >= 2 && p.h.min_degree().unwrap() >= 2
}

/// The first 50 pairs filtered to minimum degree >= 2, extended with further
/// pairs until at least 30 qualify.
fn filtered_corpus() -> Vec<Pair> {
    let mut out: Vec<Pair> = (0..50).map(corpus_pair).filter(min_deg_ok).collect();
    let mut i = 50;
    while out.len() < 30 {
        let p = corpus_pair(i);
        if min_deg_ok(&p) {
            out.push(p);
        }
        i += 1;
    }
    out
}

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut vertices = 0;
    for i in 0..50 {
        let pair = corpus_pair(i);
        let product = tensor_product(&pair.g, &pair.h).unwrap();
        let (tg, th) = (triangles_per_vertex(&pair.g), triangles_per_vertex(&pair.h));
        let enc = PairEncoding::new(pair.g.n(), pair.h.n());
        for x in 0..product.n() {
            let p = enc.decode(x).unwrap();
            let counted = oracle_triangles(&product, x).unwrap();
            ensure(counted == 2 * tg[p.u] * th[p.v], || {
                format!(
                    "{} vertex ({}, {}): {counted} != 2*{}*{}",
                    pair.label, p.u, p.v, tg[p.u], th[p.v]
                )
            })?;
            vertices += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 10.0, || format!("took {secs:.2} s, limit 10 s"))?;
    Ok(format!(
        "50 pairs, {vertices} product vertices, {secs:.2} s"
    ))
}

fn criterion_2(corpus: &[Pair]) -> Outcome {
    let mut worst = 0.0f64;
    for pair in corpus {
        let implicit = product_global_cc(&pair.g, &pair.h).unwrap();
        let explicit = global_cc(&tensor_product(&pair.g, &pair.h).unwrap()).unwrap();
        let diff = (implicit - explicit).abs();
        worst = worst.max(diff);
        ensure(diff <= TOLERANCE, || {
            format!("{}: |{implicit} - {explicit}| = {diff:e}", pair.label)
        })?;
    }
    Ok(format!(
        "{} pairs, max |diff| = {worst:e} (tol {TOLERANCE:e})",
        corpus.len()
    ))
}

fn criterion_3(corpus: &[Pair]) -> Outcome {
    let mut strict = 0;
    for pair in corpus {
        let c = cc_upper_bound_check(&pair.g, &pair.h).unwrap();
        ensure(c.applicable, || {
            format!("{}: hypothesis should hold", pair.label)
        })?;
        ensure(c.implicit <= c.bound + TOLERANCE, || {
            format!("{}: {} > {} + tol", pair.label, c.implicit, c.bound)
        })?;
        if c.strict_expected {
            ensure(c.relation == Relation::Below, || {
                format!("{}: not strict", pair.label)
            })?;
            strict += 1;
        }
    }
    let triangle_free = [
        ("C4", cycle(4).unwrap()),
        ("C6", cycle(6).unwrap()),
        ("Petersen", petersen()),
        ("K3,3", complete_bipartite(3, 3).unwrap()),
    ];
    let mut equalities = 0;
    for (name, t) in &triangle_free {
        for pair in corpus {
            for (a, b) in [(t, &pair.g), (&pair.h, t)] {
                let c = cc_upper_bound_check(a, b).unwrap();
                ensure(
                    c.implicit_exact == integer(0) && c.bound_exact == integer(0),
                    || {
                        format!(
                            "{name} with {}: {} vs {}",
                            pair.label, c.implicit_exact, c.bound_exact
                        )
                    },
                )?;
                equalities += 1;
            }
        }
    }
    Ok(format!(
        "{} pairs within bound, {strict} strict; {equalities} triangle-free pairs exactly 0 = 0",
        corpus.len()
    ))
}

fn criterion_4(corpus: &[Pair]) -> Outcome {
    let mut sharp = 0;
    for pair in corpus {
        let lb = cc_lower_bound(&pair.g, &pair.h)
            .unwrap()
            .expect("minimum degree >= 2");
        let implicit = product_global_cc(&pair.g, &pair.h).unwrap();
        ensure(implicit >= lb.bound - TOLERANCE, || {
            format!("{}: {implicit} < {} - tol", pair.label, lb.bound)
        })?;
        if product_global_cc_exact(&pair.g, &pair.h).unwrap() == lb.bound_exact {
            sharp += 1;
        }
    }
    Ok(format!(
        "{} pairs above bound ({sharp} sharp)",
        corpus.len()
    ))
}

fn regular_family() -> Vec<(&'static str, Graph)> {
    vec![
        ("K3", complete(3).unwrap()),
        ("K4", complete(4).unwrap()),
        ("K5", complete(5).unwrap()),
        ("C5", cycle(5).unwrap()),
        ("C6", cycle(6).unwrap()),
        ("Petersen", petersen()),
        ("Paley(13)", paley(13).unwrap()),
        ("Paley(17)", paley(17).unwrap()),
    ]
}

fn criterion_5() -> Outcome {
    let family = regular_family();
    let mut pairs = 0;
    for (a, g) in &family {
        for (b, h) in &family {
            let closed = regular_product_cc_exact(g, h).unwrap();
            let implicit = product_global_cc_exact(g, h).unwrap();
            ensure(closed == implicit, || {
                format!("{a} x {b}: {closed} != {implicit}")
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} regular pairs equal as exact rationals"))
}

fn criterion_6() -> Outcome {
    let expected = [
        ("Petersen", petersen(), (10, 3, 0, Some(1))),
        ("Paley(13)", paley(13).unwrap(), (13, 6, 2, Some(3))),
        ("Paley(17)", paley(17).unwrap(), (17, 8, 3, Some(4))),
        ("C5", cycle(5).unwrap(), (5, 2, 0, Some(1))),
    ];
    for (name, g, (n, d, mu1, mu2)) in &expected {
        let got = srg_detect(g).unwrap();
        let want = SrgParams {
            n: *n,
            d: *d,
            mu1: *mu1,
            mu2: *mu2,
        };
        ensure(got == Some(want), || {
            format!("{name}: detected {got:?}, expected {want}")
        })?;
    }

    let mut family: Vec<(&str, Graph)> = expected.into_iter().map(|(n, g, _)| (n, g)).collect();
    family.extend([
        ("K3", complete(3).unwrap()),
        ("K4", complete(4).unwrap()),
        ("K5", complete(5).unwrap()),
    ]);
    let mut pairs = 0;
    for (a, g) in &family {
        let pg = srg_detect(g).unwrap().unwrap();
        for (b, h) in &family {
            let ph = srg_detect(h).unwrap().unwrap();
            let closed = srg_product_cc_exact(&pg, &ph).unwrap();
            let lower = cc_lower_bound(g, h).unwrap().unwrap().bound_exact;
            let implicit = product_global_cc_exact(g, h).unwrap();
            ensure(closed == lower && lower == implicit, || {
                format!("{a} x {b}: closed {closed}, lower {lower}, implicit {implicit}")
            })?;
            pairs += 1;
        }
    }

    let k4 = complete(4).unwrap();
    let k4k4 = product_global_cc_exact(&k4, &k4).unwrap();
    ensure(k4k4 == ratio(1, 2), || format!("K4 x K4 = {k4k4}"))?;

    let p13 = paley(13).unwrap();
    let product = tensor_product(&p13, &p13).unwrap();
    let explicit = global_cc_exact(&product).unwrap();
    let implicit = product_global_cc_exact(&p13, &p13).unwrap();
    ensure(product.n() == 169, || {
        format!("product has {} vertices", product.n())
    })?;
    ensure(explicit == ratio(4, 35) && implicit == ratio(4, 35), || {
        format!("Paley(13)^2: explicit {explicit}, implicit {implicit}")
    })?;
    Ok(format!(
        "4 srg parameter sets recovered; {pairs} srg pairs sharp; K4xK4 = 1/2; Paley(13)^2 = 4/35 on 169 vertices"
    ))
}

fn criterion_7() -> Outcome {
    let k3 = complete(3).unwrap();
    let p = tensor_product(&k3, &k3).unwrap();
    ensure(p.n() == 9 && p.edge_count() == 18, || {
        format!("{} vertices, {} edges", p.n(), p.edge_count())
    })?;
    ensure(triangles_per_vertex(&p) == vec![2; 9], || {
        "triangle counts differ from 2".into()
    })?;
    for x in 0..9 {
        ensure(local_cc_exact(&p, x).unwrap() == ratio(1, 3), || {
            format!("vertex {x}")
        })?;
    }
    Ok("9 vertices, 18 edges, 2 triangles and local cc 1/3 at every vertex".into())
}

fn verify_text(g: &GraphSource, h: &GraphSource) -> String {
    let outcome = verify(&g.graph, &h.graph, Budget::default()).unwrap();
    format!("{outcome}\n{}", write_report(&verify_json(g, h, &outcome)))
}

fn criterion_8() -> Outcome {
    let gen = |s: &str| GraphSource::generated(s.parse::<Family>().unwrap(), 0).unwrap();
    let pairs = [
        (gen("complete:4"), gen("complete:4")),
        (gen("petersen"), gen("complete:4")),
        (gen("path:3"), gen("complete:3")),
        (gen("paley:13"), gen("complete:3")),
        (gen("er:14,0.5,7"), gen("er:12,0.6,8")),
    ];
    let run_all = || {
        pairs
            .iter()
            .map(|(g, h)| verify_text(g, h))
            .collect::<Vec<_>>()
            .join("\n")
    };
    let pool = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
    };
    let first = run_all();
    let second = run_all();
    let one = pool(1).install(run_all);
    let four = pool(4).install(run_all);
    ensure(first == second, || "two runs differ".into())?;
    ensure(one == four, || "1-thread and 4-thread runs differ".into())?;
    ensure(first == one, || {
        "default pool differs from 1-thread pool".into()
    })?;
    Ok(format!(
        "{} pairs, {} bytes identical across runs and 1/4 workers",
        pairs.len(),
        first.len()
    ))
}

fn criterion_9() -> Outcome {
    let cfg = BenchConfig::default();
    let rows = run_bench(&cfg).map_err(|e| e.to_string())?;
    ensure(
        rows.iter().map(|r| r.n).eq(cfg.sizes.iter().copied()),
        || "missing sizes".into(),
    )?;
    for r in &rows {
        ensure(r.speedup.is_finite() && r.speedup > 0.0, || {
            format!("n={}: speedup {}", r.n, r.speedup)
        })?;
    }
    let t50 = rows.iter().find(|r| r.n == 50).unwrap().implicit_secs;
    let t400 = rows.iter().find(|r| r.n == 400).unwrap().implicit_secs;
    let ratio = t400 / t50;
    ensure(ratio <= 50.0, || {
        format!("implicit time ratio 400/50 = {ratio:.1} > 50")
    })?;
    let speedups: Vec<String> = rows
        .iter()
        .map(|r| format!("n={}: {:.0}x", r.n, r.speedup))
        .collect();
    Ok(format!(
        "implicit 400/50 time ratio {ratio:.1}; speedups {}",
        speedups.join(", ")
    ))
}

fn main() {
    let corpus = filtered_corpus();
    let criteria: Vec<Criterion<'_>> = vec![
        (
            "1 product triangle counts (random corpus)",
            Box::new(criterion_1),
        ),
        (
            "2 implicit vs explicit global cc",
            Box::new(|| criterion_2(&corpus)),
        ),
        (
            "3 upper bound Cc(G)Cc(H)",
            Box::new(|| criterion_3(&corpus)),
        ),
        (
            "4 lower bound from sigma and average degree",
            Box::new(|| criterion_4(&corpus)),
        ),
        ("5 regular factors closed form", Box::new(criterion_5)),
        (
            "6 strongly regular parameters and sharpness",
            Box::new(criterion_6),
        ),
        ("7 K3 x K3 structure", Box::new(criterion_7)),
        ("8 verify output determinism", Box::new(criterion_8)),
        ("9 benchmark smoke", Box::new(criterion_9)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        match run() {
            Ok(msg) => println!("PASS  {name}: {msg}"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
