//! Acceptance checks, one PASS/FAIL line each. Run with
//! `cargo test -p ctxsort-cli --test acceptance`.

use std::collections::BTreeSet;
use std::panic;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ctxsort_core::analysis::{
    cdr_sortable_criterion, cdr_sortable_search, cdr_steps_after, cds_sortable_greedy,
    indiscriminate_cdr_run, run_verify, Property, SearchOptions, Selection, StateSpace, Sweep,
    VerifyConfig, DEFAULT_BUDGET,
};
use ctxsort_core::games::{winner_by_minimax, winner_by_parity, GameState, Rule};
use ctxsort_core::ops::{applicable_cdr_moves, apply_cdr, apply_cds};
use ctxsort_core::perm::{fixtures, sigma, tau};
use ctxsort_core::{
    build_overlap_graph, CdrMove, CdsMove, OrientedGraph, Pointer, SignedPermutation,
};

type Check = fn() -> Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn perm(text: &str) -> SignedPermutation {
    text.parse().expect("valid literal")
}

fn graph(oriented: &[u32], n: u32, edges: &[(u32, u32)]) -> OrientedGraph {
    let vertices: Vec<(u32, bool)> = (1..=n).map(|v| (v, oriented.contains(&v))).collect();
    OrientedGraph::new(vertices, edges.iter().copied()).expect("valid graph")
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_ctxsort"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "ctxsort {args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn example_graphs() -> Result<(), String> {
    let golden = |name: &str| {
        let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
        std::fs::read_to_string(&path).map_err(|e| format!("{path}: {e}"))
    };
    for (fixture, stem) in [("example_t", "overlap_T"), ("example_s", "overlap_S")] {
        for format in ["dot", "text"] {
            let got = cli(&["graph", "--fixture", fixture, "--format", format])?;
            let ext = if format == "dot" { "dot" } else { "txt" };
            ensure(got == golden(&format!("{stem}.{ext}"))?, || {
                format!("{fixture} {format} differs from golden")
            })?;
        }
    }
    let t_edges = [(1, 2), (2, 4), (3, 4), (1, 4), (1, 5)];
    let t = build_overlap_graph(&perm("[1,-5,-2,4,-3,6]"));
    ensure(t == graph(&[1, 3, 4, 5], 5, &t_edges), || "T graph".into())?;
    let mut s_edges = t_edges.to_vec();
    s_edges.extend([(7, 8), (7, 9), (8, 9)]);
    let s = build_overlap_graph(&perm("[-6,3,-4,2,5,-1,7,9,8,10]"));
    ensure(s == graph(&[1, 3, 4, 5, 6], 9, &s_edges), || {
        "S graph".into()
    })
}

fn step_examples() -> Result<(), String> {
    let e = |x: ctxsort_core::Error| x.to_string();
    let r = apply_cdr(&perm("[-2,1,-4,3]"), CdrMove::new(2)).map_err(e)?;
    ensure(r == perm("[4,-1,2,3]"), || format!("cdr gave {r}"))?;
    let r = apply_cds(&perm("[3,6,5,2,4,8,1,7]"), CdsMove::new(3, 6).map_err(e)?).map_err(e)?;
    ensure(r == perm("[3,4,8,1,5,2,6,7]"), || format!("cds gave {r}"))?;
    let a = apply_cdr(&perm("[1,3,5,-2,-6,4]"), CdrMove::new(5)).map_err(e)?;
    ensure(a == perm("[1,3,5,6,2,4]"), || {
        format!("maxseq step 1 gave {a}")
    })?;
    let b = apply_cds(&a, CdsMove::new(1, 2).map_err(e)?).map_err(e)?;
    ensure(b == perm("[1,2,3,5,6,4]"), || {
        format!("maxseq step 2 gave {b}")
    })?;
    let c = apply_cds(&b, CdsMove::new(3, 4).map_err(e)?).map_err(e)?;
    ensure(c.is_identity(), || format!("maxseq step 3 gave {c}"))
}

const U_PISCES_SEQUENCE: [u32; 14] = [4, 3, 2, 5, 6, 1, 7, 8, 9, 11, 12, 13, 14, 10];

fn u_pisces() -> Result<(), String> {
    let e = |x: ctxsort_core::Error| x.to_string();
    let alpha = fixtures()["u_pisces_1"].clone();
    let mut cur = alpha.clone();
    for &p in &U_PISCES_SEQUENCE {
        cur = apply_cdr(&cur, CdrMove::new(p)).map_err(e)?;
    }
    ensure(cur.is_identity(), || {
        format!("listed sequence ends at {cur}")
    })?;

    let witness = cdr_sortable_search(&alpha, SearchOptions::default());
    let w = witness.witness().ok_or("search found no witness")?;
    ensure(w.len() == 14, || {
        format!("search witness has length {}", w.len())
    })?;
    let space = StateSpace::cdr(&alpha, DEFAULT_BUDGET);
    ensure(space.is_complete(), || "state space incomplete".into())?;
    let lengths = space.lengths_to(SignedPermutation::is_identity);
    ensure(lengths == BTreeSet::from([14]), || {
        format!("sorting lengths {lengths:?}")
    })?;

    let deviated: Vec<Pointer> = U_PISCES_SEQUENCE[..11]
        .iter()
        .chain(&[10])
        .map(|&i| Pointer(i))
        .collect();
    let mut beta = alpha.clone();
    for &p in &deviated {
        beta = apply_cdr(&beta, CdrMove { pointer: p }).map_err(e)?;
    }
    let expected = perm("[1,2,3,4,5,6,7,8,9,10,11,12,13,15,14]");
    ensure(beta == expected, || format!("deviated run ends at {beta}"))?;
    ensure(applicable_cdr_moves(&beta).is_empty(), || {
        "deviated end is not a cdr fixed point".into()
    })?;
    let rescued = apply_cds(&beta, CdsMove::new(13, 14).map_err(e)?).map_err(e)?;
    ensure(rescued.is_identity(), || {
        format!("cds rescue gave {rescued}")
    })?;

    let steps = cdr_steps_after(&alpha, &deviated, Selection::Lowest, DEFAULT_BUDGET).map_err(e)?;
    ensure((steps.k(), steps.m(), steps.total()) == (12, 1, 14), || {
        format!("k={} m={} total={}", steps.k(), steps.m(), steps.total())
    })
}

fn o_nova() -> Result<(), String> {
    let pi = fixtures()["o_nova_actin1"].clone();
    ensure(!cdr_sortable_criterion(&pi), || {
        "criterion reports no unoriented component".into()
    })?;
    ensure(build_overlap_graph(&pi).has_unoriented_component(), || {
        "no unoriented component".into()
    })?;
    let (_, fixed) = indiscriminate_cdr_run(&pi, Selection::Lowest);
    ensure(fixed == perm("[-8,-7,-6,-4,-5,-3,-2,-1]"), || {
        format!("run ends at {fixed}")
    })?;
    let run = cds_sortable_greedy(&fixed);
    ensure(run.steps() == 1 && run.end.is_reverse_identity(), || {
        format!("cds ends at {} after {} moves", run.end, run.steps())
    })
}

fn sweep(property: Property, n: usize, sweep: Sweep) -> Result<(), String> {
    let report = run_verify(VerifyConfig {
        property,
        n,
        sweep,
        budget: DEFAULT_BUDGET,
    })
    .map_err(|e| e.to_string())?;
    let t = report.tally();
    ensure(report.passed() && t.pass > 0, || {
        let first = report
            .failures()
            .next()
            .map(|r| r.to_string())
            .unwrap_or_default();
        format!("{property} n={n}: {} {first}", report.summary())
    })
}

fn theorem_sweeps() -> Result<(), String> {
    for property in [
        Property::Parity,
        Property::Rescue,
        Property::Steps,
        Property::SameLength,
        Property::CdsSameLength,
    ] {
        sweep(property, 5, Sweep::Exhaustive)?;
        for n in 6..=8 {
            sweep(
                property,
                n,
                Sweep::Samples {
                    count: 10_000,
                    seed: 2024 + n as u64,
                },
            )?;
        }
    }
    Ok(())
}

fn commutation() -> Result<(), String> {
    for n in 2..=10 {
        sweep(
            Property::Commutation,
            n,
            Sweep::Samples {
                count: 10_000,
                seed: n as u64,
            },
        )?;
    }
    Ok(())
}

fn families() -> Result<(), String> {
    let isolated_oriented = |g: &OrientedGraph| {
        let r = g.component_report();
        ensure(r.components.is_empty(), || "family graph has edges".into())?;
        Ok::<usize, String>(r.isolated.iter().filter(|(_, o)| *o).count())
    };
    for n in 1..=50 {
        let s = sigma(n).map_err(|e| e.to_string())?;
        let t = tau(n).map_err(|e| e.to_string())?;
        let gs = build_overlap_graph(&s);
        let gt = build_overlap_graph(&t);
        ensure(
            isolated_oriented(&gs)? == 2 * n && gs.vertex_count() == 2 * n,
            || format!("sigma {n}"),
        )?;
        ensure(
            isolated_oriented(&gt)? == 2 * n - 1 && gt.vertex_count() == 2 * n - 1,
            || format!("tau {n}"),
        )?;
    }
    for n in 1..=4 {
        for (p, len, end) in [
            (
                sigma(n).unwrap(),
                2 * n,
                SignedPermutation::is_identity as fn(&SignedPermutation) -> bool,
            ),
            (
                tau(n).unwrap(),
                2 * n - 1,
                SignedPermutation::is_reverse_identity,
            ),
        ] {
            let space = StateSpace::cdr(&p, DEFAULT_BUDGET);
            ensure(space.is_complete(), || format!("{p}: incomplete"))?;
            let lengths: Vec<usize> = space.maximal_length_counts().into_keys().collect();
            ensure(lengths == vec![len], || {
                format!("{p}: maximal lengths {lengths:?}")
            })?;
            for id in space.terminals() {
                ensure(end(space.state(id)), || {
                    format!("{p}: ends at {}", space.state(id))
                })?;
            }
        }
    }
    Ok(())
}

fn games() -> Result<(), String> {
    let agree = |g: OrientedGraph| -> Result<(), String> {
        for rule in [Rule::Normal, Rule::Misere] {
            let s = GameState::new(g.clone(), rule);
            let exact = winner_by_minimax(&s, 10_000_000).map_err(|e| e.to_string())?;
            ensure(winner_by_parity(&s) == exact, || {
                format!("{rule} disagreement on\n{}", g.to_text())
            })?;
        }
        Ok(())
    };
    for n in 1..=5 {
        for p in SignedPermutation::all(n) {
            agree(build_overlap_graph(&p))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..500 {
        let n = rng.gen_range(1..=8);
        let (edge_p, orient_p) = (rng.gen_range(0.1..0.9), rng.gen_range(0.1..0.9));
        agree(OrientedGraph::random(n, edge_p, orient_p, &mut rng))?;
    }
    Ok(())
}

fn local_complementation() -> Result<(), String> {
    let g = graph(
        &[1, 2, 6],
        7,
        &[
            (5, 1),
            (4, 1),
            (2, 3),
            (2, 7),
            (4, 3),
            (5, 3),
            (6, 3),
            (4, 7),
            (5, 4),
            (6, 4),
            (5, 7),
            (5, 6),
        ],
    );
    let expected = graph(
        &[1, 2, 3, 4, 5],
        7,
        &[(5, 1), (5, 7), (2, 7), (4, 1), (3, 2), (4, 7)],
    );
    ensure(g.local_complement(&[3, 4, 5, 6]) == expected, || {
        "lc on S = {3,4,5,6}".into()
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10_000 {
        let n = rng.gen_range(1..=10);
        let g = OrientedGraph::random(n, 0.5, 0.5, &mut rng);
        let set: Vec<u32> = (1..=n as u32).filter(|_| rng.gen_bool(0.5)).collect();
        ensure(g.local_complement(&set).local_complement(&set) == g, || {
            format!("involution fails for {set:?} on\n{}", g.to_text())
        })?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Check, Duration); 9] = [
        (
            "overlap graphs of T and S match the golden files",
            example_graphs,
            Duration::from_secs(1),
        ),
        (
            "cdr, cds and maxseq step examples",
            step_examples,
            Duration::from_secs(1),
        ),
        (
            "U. pisces sequence, witnesses, deviation, rescue, steps",
            u_pisces,
            Duration::from_secs(10),
        ),
        (
            "O. nova criterion, run and reverse rescue",
            o_nova,
            Duration::from_secs(1),
        ),
        (
            "parity, rescue, steps, same-length, cds same-length sweeps",
            theorem_sweeps,
            Duration::from_secs(600),
        ),
        (
            "commutation of cdr with gcdr",
            commutation,
            Duration::from_secs(60),
        ),
        ("sigma and tau families", families, Duration::from_secs(60)),
        (
            "game winners by parity and by minimax",
            games,
            Duration::from_secs(300),
        ),
        (
            "local complementation example and involution",
            local_complementation,
            Duration::from_secs(10),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|()| {
            ensure(elapsed <= limit, || {
                format!("took {elapsed:.2?}, limit {limit:?}")
            })
        });
        match result {
            Ok(()) => println!("criterion {}: PASS ({elapsed:.2?}) {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL ({elapsed:.2?}) {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
