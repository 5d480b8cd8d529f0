//! Acceptance gate: one PASS/FAIL line per criterion.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tfp_core::indeg::IndegRoute;
use tfp_core::oracles::{in_neighbors_alive_after, repair_to_nice_counted};
use tfp_core::{
    brute_force_decide, brute_force_wwf, complete_wwf, extract_local_lba, gen_planted_yes,
    gen_random, is_lba, is_wwf, lba_to_seeding, niceness, sample_coloring, seeding_to_lba,
    simulate, solve_exact, solve_indeg, solve_outdeg, GenSpec, IndegConfig, Seeding, Tournament,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn wins(t: &Tournament, s: &Seeding) -> bool {
    simulate(t, s).champion() == t.vstar()
}

fn exact_decision(t: &Tournament) -> Result<bool, String> {
    solve_exact(t)
        .map(|l| l.is_some())
        .map_err(|e| e.to_string())
}

fn all_n4() -> Vec<Tournament> {
    (0u32..64)
        .map(|mask| {
            let mut bit = 0;
            Tournament::from_fn(4, 0, |_, _| {
                let b = mask >> bit & 1 == 1;
                bit += 1;
                b
            })
            .unwrap()
        })
        .collect()
}

fn c1_exhaustive_n4() -> Outcome {
    let cfg = IndegConfig::new(42, 20.0);
    let mut yes = 0;
    for t in all_n4() {
        let truth = brute_force_decide(&t).map_err(|e| e.to_string())?;
        yes += usize::from(truth.is_some());
        let answers = [
            (
                "exact",
                solve_exact(&t)
                    .map_err(|e| e.to_string())?
                    .map(|l| lba_to_seeding(&l).unwrap()),
            ),
            ("outdeg", solve_outdeg(&t).map_err(|e| e.to_string())?),
            ("indeg", solve_indeg(&t, &cfg).map_err(|e| e.to_string())?),
        ];
        for (name, got) in answers {
            ensure(got.is_some() == truth.is_some(), || {
                format!(
                    "{name} disagrees with brute force on\n{}",
                    t.to_tfp_string()
                )
            })?;
            if let Some(s) = got {
                ensure(wins(&t, &s), || {
                    format!("{name} returned a losing seeding {s}")
                })?;
            }
        }
    }
    Ok(format!("64 orientations, {yes} yes"))
}

/// Criterion 2 instances: seed i, k = i mod 8.
fn n8_instances() -> Vec<Tournament> {
    (0..1000u64)
        .map(|i| gen_random(&GenSpec::random(8, (i % 8) as usize, 8_000 + i)).unwrap())
        .collect()
}

fn c2_sampled_n8(instances: &[Tournament]) -> Outcome {
    let mut yes = 0;
    for (i, t) in instances.iter().enumerate() {
        let truth = brute_force_decide(t).map_err(|e| e.to_string())?.is_some();
        ensure(exact_decision(t)? == truth, || {
            format!("instance {i}: exact disagrees")
        })?;
        yes += usize::from(truth);
    }
    Ok(format!("{} instances, {yes} yes", instances.len()))
}

/// A no-instance: the in-neighbors of the favorite beat everyone else, so
/// whichever of them survives longest can never be knocked out.
fn hardened(k: usize, seed: u64) -> Tournament {
    let t = gen_random(&GenSpec::random(16, k, seed)).unwrap();
    Tournament::from_fn(16, 0, |u, v| {
        match (t.is_in_neighbor(u), t.is_in_neighbor(v)) {
            (true, false) if v != 0 => true,
            (false, true) if u != 0 => false,
            _ => t.beats(u, v),
        }
    })
    .unwrap()
}

fn c3_indeg_vs_exact() -> Outcome {
    let cfg = IndegConfig::new(7, 20.0);
    let mut yes = 0;
    let mut no = 0;
    for i in 0..220u64 {
        let k = 1 + (i % 2) as usize;
        // 200 uniform instances, then 20 constructed no-instances.
        let t = if i < 200 {
            gen_random(&GenSpec::random(16, k, 16_000 + i)).unwrap()
        } else {
            hardened(k, 16_000 + i)
        };
        let exact = exact_decision(&t)?;
        no += usize::from(!exact);
        let (got, route) =
            tfp_core::indeg::solve_indeg_traced(&t, &cfg).map_err(|e| e.to_string())?;
        ensure(route == IndegRoute::ColorCoding, || {
            format!("instance {i} took route {route:?}")
        })?;
        ensure(got.is_some() == exact, || {
            format!(
                "instance {i} (k={k}): indeg {} vs exact {exact}",
                got.is_some()
            )
        })?;
        if let Some(s) = got {
            ensure(wins(&t, &s), || format!("instance {i}: losing seeding"))?;
            yes += 1;
        }
    }
    Ok(format!(
        "200 random + 20 constructed instances, {yes} yes, {no} no"
    ))
}

fn c4_wwf_equivalence() -> Outcome {
    let mut present = 0;
    for i in 0..110u64 {
        let k = 1 + (i % 2) as usize;
        let t = if i < 100 {
            gen_random(&GenSpec::random(16, k, 4_000 + i)).unwrap()
        } else {
            hardened(k, 4_000 + i)
        };
        let exact = exact_decision(&t)?;
        let wwf = brute_force_wwf(&t).map_err(|e| e.to_string())?;
        ensure(wwf.is_some() == exact, || {
            format!("instance {i}: wwf {} vs exact {exact}", wwf.is_some())
        })?;
        if let Some(w) = wwf {
            present += 1;
            ensure(is_wwf(&t, w.trees()), || {
                format!("instance {i}: invalid forest")
            })?;
            let full = complete_wwf(&t, &w).map_err(|e| e.to_string())?;
            ensure(
                full.root() == t.vstar() && full.len() == t.n() && is_lba(&t, &full),
                || format!("instance {i}: completion is not a spanning arborescence"),
            )?;
        }
    }
    Ok(format!(
        "100 random + 10 constructed instances, forest present in {present}"
    ))
}

fn c5_nice_repair(instances: &[Tournament]) -> Outcome {
    let mut checked = 0;
    let mut repaired = 0;
    for (i, t) in instances.iter().enumerate() {
        let Some(s) = brute_force_decide(t).map_err(|e| e.to_string())? else {
            continue;
        };
        let (fixed, steps) =
            repair_to_nice_counted(t, &s).map_err(|e| format!("instance {i}: {e}"))?;
        let trace = simulate(t, &fixed);
        ensure(trace.champion() == t.vstar(), || {
            format!("instance {i}: repair lost")
        })?;
        ensure(niceness(t, &trace).all_nice, || {
            format!("instance {i}: repair not nice")
        })?;
        ensure(
            in_neighbors_alive_after(t, &trace, t.k()).is_empty(),
            || format!("instance {i}: in-neighbor alive after round k"),
        )?;
        ensure(steps <= t.rounds(), || {
            format!("instance {i}: {steps} repair steps")
        })?;
        checked += 1;
        repaired += usize::from(steps > 0);
    }
    Ok(format!("{checked} yes-instances, {repaired} needed repair"))
}

fn c6_local_extraction() -> Outcome {
    let mut trees = 0;
    let mut extractions = 0;
    let mut seed = 6_000u64;
    while trees < 100 {
        seed += 1;
        ensure(seed < 7_000, || format!("only {trees} yes-instances found"))?;
        let k = 1 + (seed % 3) as usize;
        let t = gen_random(&GenSpec::random(16, k, seed)).unwrap();
        let Some(full) = solve_exact(&t).map_err(|e| e.to_string())? else {
            continue;
        };
        let s = lba_to_seeding(&full).map_err(|e| e.to_string())?;
        let nice = repair_to_nice_counted(&t, &s).map_err(|e| e.to_string())?.0;
        ensure(niceness(&t, &simulate(&t, &nice)).all_nice, || {
            "repair not nice".into()
        })?;
        let full = seeding_to_lba(&t, &nice);
        trees += 1;
        for b in t.in_neighbors() {
            let local = extract_local_lba(&t, &full, b).map_err(|e| format!("seed {seed}: {e}"))?;
            ensure(
                local.len() == 1 << k
                    && local.contains(b)
                    && !t.is_in_neighbor(local.root())
                    && is_lba(&t, &local),
                || format!("seed {seed}, b={b}: bad local arborescence {local}"),
            )?;
            extractions += 1;
        }
    }
    Ok(format!(
        "{trees} nice winning arborescences, {extractions} extractions"
    ))
}

fn c7_coloring_statistics() -> Outcome {
    // Six free vertices of X draw from six colors: colorful iff all distinct.
    let total = 6usize.pow(6);
    let colorful = (0..total)
        .filter(|&code| {
            let mut seen = 0u8;
            (0..6).all(|i| {
                let c = code / 6usize.pow(i) % 6;
                let fresh = seen & 1 << c == 0;
                seen |= 1 << c;
                fresh
            })
        })
        .count();
    let exact = colorful as f64 / total as f64;
    let closed_form = 720.0 / 46656.0;
    ensure((exact - closed_form).abs() < 1e-12, || {
        format!("enumeration gave {exact}")
    })?;

    let t = gen_random(&GenSpec::random(16, 2, 77)).unwrap();
    let mut x = t.in_neighbors();
    x.extend(t.out_neighbors().into_iter().take(5));
    x.push(t.vstar());
    ensure(x.len() == 8, || "target set must have 8 vertices".into())?;

    let samples = 100_000;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut hits = 0;
    for _ in 0..samples {
        let c = sample_coloring(&t, &mut rng);
        let mut colors: Vec<u32> = x.iter().map(|&v| c.color(v)).collect();
        colors.sort_unstable();
        colors.dedup();
        hits += usize::from(colors.len() == x.len());
    }
    let frac = hits as f64 / samples as f64;
    let bound = (-6f64).exp();
    ensure(frac >= bound, || {
        format!("fraction {frac:.6} below e^-6 = {bound:.6}")
    })?;
    ensure((frac - exact).abs() <= 0.003, || {
        format!("fraction {frac:.6} not within 0.003 of {exact:.6}")
    })?;
    Ok(format!(
        "fraction {frac:.6}, exact {exact:.6}, bound {bound:.6}"
    ))
}

fn c8_planted_n64() -> Outcome {
    let cfg = IndegConfig::new(11, 20.0);
    for i in 0..20u64 {
        let p = gen_planted_yes(&GenSpec::planted(64, 2, 64_000 + i)).map_err(|e| e.to_string())?;
        ensure(wins(&p.tournament, &p.witness), || {
            format!("instance {i}: bad plant")
        })?;
        let s = solve_indeg(&p.tournament, &cfg)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("instance {i}: no bracket found"))?;
        ensure(wins(&p.tournament, &s), || {
            format!("instance {i}: losing seeding")
        })?;
    }
    Ok("20 planted instances solved".into())
}

fn run_cli(args: &[&str], threads: &str) -> Result<(Vec<u8>, Option<i32>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_tfp"))
        .args(args)
        .env("TFP_THREADS", threads)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.stdout, out.status.code()))
}

fn c9_determinism(dir: &Path) -> Outcome {
    let write = |name: &str, t: &Tournament| -> Result<String, String> {
        let p = dir.join(name);
        std::fs::write(&p, t.to_tfp_string()).map_err(|e| e.to_string())?;
        Ok(p.to_string_lossy().into_owned())
    };
    let t4 = write(
        "t4.tfp",
        &Tournament::from_rows(&["0101", "0011", "1000", "0010"], 0).unwrap(),
    )?;
    let r16 = write("r16.tfp", &gen_random(&GenSpec::random(16, 2, 9)).unwrap())?;
    let r16b = write(
        "r16b.tfp",
        &gen_random(&GenSpec::random(16, 1, 10)).unwrap(),
    )?;
    let p64 = write(
        "p64.tfp",
        &gen_planted_yes(&GenSpec::planted(64, 2, 5))
            .unwrap()
            .tournament,
    )?;
    let cases: Vec<Vec<&str>> = vec![
        vec!["solve", &t4],
        vec![
            "solve",
            &r16,
            "--algo",
            "indeg",
            "--seed",
            "7",
            "--iter-multiplier",
            "20",
        ],
        vec![
            "solve",
            &r16,
            "--algo",
            "indeg",
            "--seed",
            "3",
            "--iter-multiplier",
            "0.01",
        ],
        vec!["decide", &r16b, "--algo", "exact"],
        vec!["solve", &r16b, "--algo", "auto", "--seed", "1"],
        vec!["solve", &p64, "--seed", "5", "--iter-multiplier", "20"],
    ];
    for args in &cases {
        let reference = run_cli(args, "1")?;
        ensure(matches!(reference.1, Some(0 | 1)), || {
            format!("{args:?} exited {:?}", reference.1)
        })?;
        for threads in ["4", "2", "4"] {
            let again = run_cli(args, threads)?;
            ensure(again == reference, || {
                format!("{args:?} differs with TFP_THREADS={threads}")
            })?;
        }
    }
    Ok(format!(
        "{} invocations x 4 runs byte-identical",
        cases.len()
    ))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
}

fn main() {
    let dir = std::env::temp_dir().join(format!("tfp-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let n8 = n8_instances();

    let criteria: Vec<(Criterion, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (
            Criterion {
                id: 1,
                name: "exhaustive exactness n=4",
                limit: Duration::from_secs(5),
            },
            Box::new(c1_exhaustive_n4),
        ),
        (
            Criterion {
                id: 2,
                name: "sampled exactness n=8",
                limit: Duration::from_secs(60),
            },
            Box::new(|| c2_sampled_n8(&n8)),
        ),
        (
            Criterion {
                id: 3,
                name: "color coding agrees with exact n=16",
                limit: Duration::from_secs(300),
            },
            Box::new(c3_indeg_vs_exact),
        ),
        (
            Criterion {
                id: 4,
                name: "forest presence equals exact n=16",
                limit: Duration::from_secs(300),
            },
            Box::new(c4_wwf_equivalence),
        ),
        (
            Criterion {
                id: 5,
                name: "nice repair n=8",
                limit: Duration::from_secs(60),
            },
            Box::new(|| c5_nice_repair(&n8)),
        ),
        (
            Criterion {
                id: 6,
                name: "local arborescence extraction n=16",
                limit: Duration::from_secs(300),
            },
            Box::new(c6_local_extraction),
        ),
        (
            Criterion {
                id: 7,
                name: "coloring probability k=2",
                limit: Duration::from_secs(60),
            },
            Box::new(c7_coloring_statistics),
        ),
        (
            Criterion {
                id: 8,
                name: "planted soundness n=64 k=2",
                limit: Duration::from_secs(60),
            },
            Box::new(c8_planted_n64),
        ),
        (
            Criterion {
                id: 9,
                name: "deterministic CLI output",
                limit: Duration::from_secs(120),
            },
            Box::new(|| c9_determinism(&dir)),
        ),
    ];

    let mut failed = 0;
    for (c, check) in &criteria {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed > c.limit {
                Err(format!("{detail}; took {elapsed:.2?}, limit {:?}", c.limit))
            } else {
                Ok(detail)
            }
        });
        match outcome {
            Ok(detail) => println!(
                "PASS criterion {}: {} ({detail}; {elapsed:.2?})",
                c.id, c.name
            ),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {} ({why}; {elapsed:.2?})", c.id, c.name);
            }
        }
    }
    let _ = std::fs::remove_dir_all(&dir);
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
