//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the lines come out in order
//! and unbuffered. Exits non-zero when any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cocrit::arrowing::ArrowStatus;
use cocrit::bounds::{
    degree3_saturated_bound, j_edge_count, lower_bound_edges, three_claw_bound, upper_edge_count,
};
use cocrit::cocritical::{
    audit_all_optima, audit_structure, is_kt_saturated, verify_cocritical, AuditOutcome,
    CocriticalVerdict,
};
use cocrit::constructions::{build, build_j, build_t3, build_t45, JParams};
use cocrit::iso::are_isomorphic;
use cocrit::oracle::brute_force_critical;
use cocrit::props::hajnal_dichotomy;
use cocrit::search::{
    enumerate_small_cocritical, local_search_cocritical, random_maximal_ktfree, LocalSearchBudget,
    RngSeed,
};
use cocrit::{
    arrows, emit_graph6, enumerate_critical, is_critical, Graph, PairParams, Rational, SearchBudget,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Failure description; any displayable error converts into one.
struct Fail(String);

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail(e.to_string())
    }
}

type Check = Result<String, Fail>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), Fail> {
    if cond {
        Ok(())
    } else {
        Err(Fail(msg()))
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), Fail> {
    let took = start.elapsed();
    ensure(took <= limit, || format!("took {took:?}, limit {limit:?}"))
}

fn pair(t: usize, k: usize) -> PairParams {
    PairParams::new(t, k).unwrap()
}

fn c1_sharp_construction() -> Check {
    let start = Instant::now();
    let c = build_t3(3, 13)?;
    let e = c.graph.edge_count();
    ensure(e == 35 && e == three_claw_bound(13), || format!("e = {e}"))?;
    within(start, Duration::from_secs(1))?;
    Ok(format!("e = {e} = 3n - 4"))
}

fn c2_full_verification() -> Check {
    let start = Instant::now();
    let c = build_t3(3, 13)?;
    let p = pair(3, 3);
    ensure(is_critical(&c.graph, &c.sigma, p).unwrap(), || {
        "sigma is not critical".into()
    })?;
    let r = verify_cocritical(&c.graph, p, SearchBudget::unlimited());
    ensure(r.verdict == CocriticalVerdict::CoCritical, || {
        format!("{:?}", r.verdict)
    })?;
    let arrowing = r
        .nonedge_results
        .iter()
        .filter(|x| x.verdict.status == ArrowStatus::Arrows)
        .count();
    ensure(r.nonedge_results.len() == 43 && arrowing == 43, || {
        format!(
            "{arrowing} of {} augmentations arrow",
            r.nonedge_results.len()
        )
    })?;
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "CoCritical, 43/43 augmentations arrow ({:?})",
        start.elapsed()
    ))
}

fn c3_uniqueness() -> Check {
    let start = Instant::now();
    let c = build_t3(3, 13)?;
    let e = enumerate_critical(&c.graph, pair(3, 3), usize::MAX, SearchBudget::unlimited());
    ensure(e.complete, || "enumeration incomplete".into())?;
    ensure(e.colorings.len() == 1, || {
        format!("{} colorings", e.colorings.len())
    })?;
    ensure(e.colorings[0] == c.sigma, || {
        "the only coloring differs from sigma".into()
    })?;
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "exactly one critical coloring, equal to sigma ({} nodes)",
        e.nodes_explored
    ))
}

fn c4_ramsey() -> Check {
    let start = Instant::now();
    let p = pair(3, 3);
    let k7 = arrows(&Graph::complete(7), p, SearchBudget::unlimited());
    ensure(k7.arrows(), || format!("K7: {}", k7.label()))?;
    let k6 = arrows(&Graph::complete(6), p, SearchBudget::unlimited());
    let ArrowStatus::NotArrows(w) = &k6.status else {
        return Err(Fail(format!("K6: {}", k6.label())));
    };
    ensure(is_critical(&Graph::complete(6), w, p).unwrap(), || {
        "K6 witness not critical".into()
    })?;
    let red = common::matrix(&w.red_graph());
    let blue = w.blue_graph();
    ensure(
        !common::has_clique(&red, 3) && blue.max_degree() <= 2,
        || "K6 witness fails the independent check".into(),
    )?;
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "K7 arrows ({} nodes), K6 has a verified witness",
        k7.nodes
    ))
}

fn c5_oracle_equivalence() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0C0);
    let pairs = [(3, 3), (3, 4), (4, 3)];
    let mut total = 0u64;
    for i in 0..200 {
        let n = rng.gen_range(2..=9);
        let all: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let m = rng.gen_range(0..=16.min(all.len()));
        let edges: Vec<_> = rand::seq::index::sample(&mut rng, all.len(), m)
            .into_iter()
            .map(|j| all[j])
            .collect();
        let g = Graph::from_edges(n, &edges).unwrap();
        let (t, k) = pairs[i % 3];
        let p = pair(t, k);
        let fast = enumerate_critical(&g, p, usize::MAX, SearchBudget::unlimited());
        let brute = brute_force_critical(&g, p).unwrap();
        let independent = common::critical_count(&g, t, k);
        ensure(
            fast.complete && fast.colorings.len() as u64 == brute && brute == independent,
            || {
                format!(
                    "{} (t={t}, k={k}): engine {}, oracle {brute}, independent {independent}",
                    emit_graph6(&g),
                    fast.colorings.len()
                )
            },
        )?;
        total += brute;
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!("200 graphs agree ({total} colorings in total)"))
}

fn c6_edge_formulas() -> Check {
    let start = Instant::now();
    let mut checked = 0;
    let mut skipped = Vec::new();
    for t in 3..=5 {
        for k in 3..=5 {
            let lo = (2 * t - 2) * k + 1;
            for n in lo..=lo + 5 {
                match build(t, k, n) {
                    Ok(c) => {
                        let e = c.graph.edge_count();
                        let formula = upper_edge_count(t, k, n)?;
                        ensure(e == formula, || {
                            format!("({t},{k},{n}): built {e}, formula {formula}")
                        })?;
                        checked += 1;
                    }
                    Err(_) => skipped.push((t, k, n)),
                }
            }
        }
    }
    ensure(build(3, 3, 13)?.graph.edge_count() == 35, || {
        "(3,3,13)".into()
    })?;
    ensure(build(4, 3, 19)?.graph.edge_count() == 91, || {
        "(4,3,19)".into()
    })?;
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{checked} instances match; spot values 35 and 91; unrealizable {skipped:?}"
    ))
}

fn c7_t45_sigma() -> Check {
    let start = Instant::now();
    for (t, n) in [(4, 19), (5, 25)] {
        let c = build_t45(t, 3, n)?;
        ensure(is_critical(&c.graph, &c.sigma, pair(t, 3)).unwrap(), || {
            format!("sigma at ({t},3,{n}) is not critical")
        })?;
    }
    ensure(start.elapsed() < Duration::from_secs(1), || {
        "sigma checks were slow".into()
    })?;
    let c = build_t45(4, 3, 19)?;
    let budget = SearchBudget::new(u64::MAX, Duration::from_secs(3600))?;
    let r = verify_cocritical(&c.graph, pair(4, 3), budget);
    let verdict = match &r.verdict {
        CocriticalVerdict::CoCritical => "CoCritical".to_string(),
        CocriticalVerdict::Unverified { unknown_edges, .. } => {
            format!("Unverified ({} edges unknown)", unknown_edges.len())
        }
        CocriticalVerdict::NotCoCritical(why) => return Err(Fail(format!("refuted: {why:?}"))),
    };
    let uniq = enumerate_critical(
        &c.graph,
        pair(4, 3),
        100_000,
        SearchBudget::new(u64::MAX, Duration::from_secs(60))?,
    );
    let uniq = if uniq.complete {
        format!("{} critical colorings", uniq.colorings.len())
    } else if uniq.hit_limit {
        "at least 100000 critical colorings".to_string()
    } else {
        "coloring count unknown within 60 s".to_string()
    };
    Ok(format!(
        "sigma critical at (4,3,19), (5,3,25); (4,3,19) {verdict} on {} non-edges; {uniq}",
        r.nonedge_results.len()
    ))
}

fn c8_structural_audit() -> Check {
    let mut lines = Vec::new();
    for (t, n) in [(3, 13), (4, 19)] {
        let c = build(t, 3, n)?;
        let p = pair(t, 3);
        let AuditOutcome::Audited {
            coloring, audit, ..
        } = audit_structure(&c.graph, p, SearchBudget::unlimited())
        else {
            return Err(Fail(format!("({t},3,{n}): no max-red coloring")));
        };
        let failed: Vec<_> = audit.checks().into_iter().filter(|&(_, ok)| !ok).collect();
        ensure(failed.is_empty(), || {
            format!("({t},3,{n}) failed {failed:?}")
        })?;
        ensure(is_kt_saturated(&coloring.red_graph(), t), || {
            "red graph not saturated".into()
        })?;
        let all = audit_all_optima(&c.graph, p, 10_000, SearchBudget::unlimited())
            .ok_or_else(|| Fail(format!("({t},3,{n}): optima not enumerated")))?;
        ensure(all.iter().all(|(_, a)| a.all_pass()), || {
            format!("({t},3,{n}): an optimum fails")
        })?;
        if t == 3 {
            ensure(audit.delta_red == 2, || {
                format!("delta_red = {}", audit.delta_red)
            })?;
            let red = coloring.red_graph();
            let is_j = JParams::all_of_order(n)
                .into_iter()
                .any(|jp| are_isomorphic(&build_j(jp), &red).unwrap().is_some());
            ensure(is_j, || "red graph is not a J graph".into())?;
        } else {
            ensure(audit.delta_red >= 4, || {
                format!("delta_red = {}", audit.delta_red)
            })?;
        }
        lines.push(format!(
            "({t},3,{n}): {} checks, {} optima, |S| = {}, delta_red = {}",
            audit.checks().len(),
            all.len(),
            audit.s.len(),
            audit.delta_red
        ));
    }
    Ok(lines.join("; "))
}

fn c9_j_classification() -> Check {
    let start = Instant::now();
    let mut found = 0;
    for n in 1..=6usize {
        let m = n * (n - 1) / 2;
        let js: Vec<Graph> = JParams::all_of_order(n).into_iter().map(build_j).collect();
        for mask in 0u64..1 << m {
            let g = common::graph_from_mask(n, mask);
            let sat = common::is_saturated(&common::matrix(&g), 3);
            ensure(sat == is_kt_saturated(&g, 3), || {
                format!("saturation disagrees on {}", emit_graph6(&g))
            })?;
            if !sat || g.min_degree() != 2 {
                continue;
            }
            found += 1;
            let j = JParams::all_of_order(n)
                .into_iter()
                .zip(&js)
                .find(|(_, h)| common::isomorphic(h, &g))
                .map(|(p, _)| p)
                .ok_or_else(|| Fail(format!("{} is not a J graph", emit_graph6(&g))))?;
            ensure(g.edge_count() == j_edge_count(j.a(), j.b(), j.c()), || {
                format!("edge count of {}", emit_graph6(&g))
            })?;
        }
    }
    within(start, Duration::from_secs(600))?;
    Ok(format!(
        "{found} labeled graphs, all J graphs with matching edge counts"
    ))
}

fn c10_hajnal_fuzz() -> Check {
    let start = Instant::now();
    let mut dh = 0;
    for i in 0..1000u64 {
        let t = 3 + (i % 3) as usize;
        let n = t + (i as usize * 7919) % (31 - t);
        let g = random_maximal_ktfree(n, t, RngSeed(i))?;
        ensure(hajnal_dichotomy(&g, t), || {
            format!("seed {i}: {}", emit_graph6(&g))
        })?;
        let nmax = g.max_degree();
        ensure(nmax + 1 == n || g.min_degree() >= 2 * (t - 2), || {
            format!("seed {i}: degrees")
        })?;
        if t == 3 && g.min_degree() == 3 && n >= 10 {
            dh += 1;
            ensure(g.edge_count() >= degree3_saturated_bound(n), || {
                format!("seed {i}: {} edges on {n} vertices", g.edge_count())
            })?;
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(format!(
        "1000 samples satisfy the dichotomy; 3n - 15 checked on {dh} samples"
    ))
}

fn c11_lower_bounds() -> Check {
    let mut certified: Vec<(PairParams, Graph)> = Vec::new();
    let p33 = pair(3, 3);
    certified.push((p33, build_t3(3, 13)?.graph));
    certified.extend(
        enumerate_small_cocritical(7, p33)?
            .graphs
            .into_iter()
            .map(|g| (p33, g)),
    );
    for seed in 0..3 {
        let r = local_search_cocritical(p33, 13, RngSeed(seed), LocalSearchBudget::moves(20))?;
        certified.push((p33, r.best));
    }
    for (k, n) in [(4, 17), (5, 21)] {
        let p = pair(3, k);
        let r = local_search_cocritical(p, n, RngSeed(k as u64), LocalSearchBudget::moves(3))?;
        certified.push((p, r.best));
    }
    for (p, g) in &certified {
        let r = verify_cocritical(g, *p, SearchBudget::unlimited());
        ensure(r.verdict == CocriticalVerdict::CoCritical, || {
            format!("{} not certified", emit_graph6(g))
        })?;
        let (n, e) = (g.n(), g.edge_count());
        let lb: Rational = lower_bound_edges(3, p.k(), n)?;
        ensure(Rational::from(e as i64) >= lb, || {
            format!("{} below {lb}", emit_graph6(g))
        })?;
        if p.k() == 3 && n >= 13 {
            ensure(e >= three_claw_bound(n), || {
                format!("{} below 3n - 4", emit_graph6(g))
            })?;
        }
    }
    Ok(format!(
        "{} certified graphs respect both bounds",
        certified.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("sharp construction at (3,3,13)", c1_sharp_construction),
        (
            "co-criticality of the (3,3,13) construction",
            c2_full_verification,
        ),
        ("uniqueness of sigma at (3,3,13)", c3_uniqueness),
        ("Ramsey number r(K3, K1,3) = 7", c4_ramsey),
        ("engine agrees with brute force", c5_oracle_equivalence),
        ("closed-form edge counts", c6_edge_formulas),
        ("sigma criticality for t = 4, 5", c7_t45_sigma),
        ("structural audit of max-red colorings", c8_structural_audit),
        ("J classification on n <= 6", c9_j_classification),
        ("Hajnal dichotomy fuzz", c10_hajnal_fuzz),
        ("lower bounds on certified graphs", c11_lower_bounds),
    ];
    let quiet = panic::take_hook();
    panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(Fail(format!("panicked: {msg}")))
        });
        let took = start.elapsed();
        match result {
            Ok(detail) => println!("PASS criterion {:>2}: {name}: {detail} [{took:.2?}]", i + 1),
            Err(Fail(why)) => {
                failures += 1;
                println!("FAIL criterion {:>2}: {name}: {why} [{took:.2?}]", i + 1);
            }
        }
    }
    panic::set_hook(quiet);
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
