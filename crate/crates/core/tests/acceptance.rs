//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line
//! with its runtime; the process fails if any criterion fails or exceeds
//! its time budget.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{colored, term, SIZE_FOUR_TERMS};
use lammap::bijection::verify_bijection;
use lammap::counting::{
    check_identities, closed_form_r0, count_tables, enumerate_colored, enumerate_npt, tutte_count,
};
use lammap::io::{parse_map, MapFileError};
use lammap::lambda::{
    compose_fun_open, compose_val_open, decompose_fun_open, decompose_val_open, is_planar,
    wrap_value_open, Kind, Npt, Step, Trichotomy,
};
use lammap::maps::{
    compose_isthmic, compose_nonisthmic, decompose_isthmic, decompose_nonisthmic, maps_by_edges,
    MapClass, MapError,
};
use num_bigint::BigUint;

const NORMAL_TABLE: [[u64; 10]; 7] = [
    [1, 2, 9, 54, 378, 2916, 24057, 208494, 1876446, 17399772],
    [1, 2, 9, 54, 378, 2916, 24057, 208494, 1876446, 17399772],
    [0, 1, 6, 40, 295, 2346, 19739, 173426, 1576539, 14730778],
    [0, 0, 2, 20, 175, 1526, 13587, 123978, 1157739, 11036038],
    [0, 0, 0, 5, 70, 756, 7602, 74964, 738369, 7315618],
    [0, 0, 0, 0, 14, 252, 3234, 36828, 398673, 4220722],
    [0, 0, 0, 0, 0, 42, 924, 13728, 174603, 2059486],
];

const NEUTRAL_TABLE: [[u64; 10]; 6] = [
    [1, 1, 3, 14, 83, 570, 4318, 35068, 299907, 2668994],
    [0, 1, 4, 20, 120, 820, 6152, 49448, 418800, 3694740],
    [0, 0, 2, 15, 105, 770, 5985, 49014, 419370, 3720420],
    [0, 0, 0, 5, 56, 504, 4368, 38136, 339696, 3094896],
    [0, 0, 0, 0, 14, 210, 2310, 23100, 224070, 2161236],
    [0, 0, 0, 0, 0, 42, 792, 10296, 116688, 1245816],
];

const CLOSED_PREFIX: [u64; 10] = [1, 2, 9, 54, 378, 2916, 24057, 208494, 1876446, 17399772];

type Outcome = Result<String, String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);
type Table = (Vec<u64>, Vec<(u64, Vec<u64>)>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn cli(args: &[&str]) -> Result<String, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("lammap").chain(args.iter().copied());
    let code = lammap::cli::run(argv, &mut out, &mut err);
    ensure!(code == 0, "`{}` exited {code}: {}", args.join(" "), String::from_utf8_lossy(&err));
    String::from_utf8(out).map_err(|e| e.to_string())
}

/// Parses a tab-separated count table into (column headers, rows).
fn parse_table(text: &str) -> Result<Table, String> {
    let mut lines = text.lines();
    let header = lines.next().ok_or("empty table")?;
    let num = |s: &str| s.parse::<u64>().map_err(|e| format!("{s:?}: {e}"));
    let cols = header.split('\t').skip(1).map(num).collect::<Result<Vec<_>, _>>()?;
    let rows = lines
        .map(|l| {
            let cells = l.split('\t').map(num).collect::<Result<Vec<_>, _>>()?;
            Ok((cells[0], cells[1..].to_vec()))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok((cols, rows))
}

fn count_tables_match() -> Outcome {
    let (cols, rows) = parse_table(&cli(&[
        "count", "--kind", "normal", "--max-size", "10", "--max-vars", "6",
    ])?)?;
    ensure!(cols == (1..=10).collect::<Vec<_>>(), "normal columns {cols:?}");
    ensure!(rows.len() == 7, "normal table has {} rows", rows.len());
    let mut cells = 0;
    for (i, (label, row)) in rows.iter().enumerate() {
        ensure!(*label == i as u64, "normal row label {label}");
        ensure!(row[..] == NORMAL_TABLE[i], "normal row i={i}: {row:?}");
        cells += row.len();
    }

    let (cols, rows) = parse_table(&cli(&[
        "count", "--kind", "neutral", "--max-size", "9", "--max-vars", "6",
    ])?)?;
    ensure!(cols == (0..=9).collect::<Vec<_>>(), "neutral columns {cols:?}");
    ensure!(rows.len() == 6, "neutral table has {} rows", rows.len());
    for (i, (label, row)) in rows.iter().enumerate() {
        ensure!(*label == i as u64 + 1, "neutral row label {label}");
        ensure!(row[..] == NEUTRAL_TABLE[i], "neutral row i={}: {row:?}", i + 1);
        cells += row.len();
    }
    Ok(format!("{cells} cells equal"))
}

fn sequence_identity() -> Outcome {
    const N: usize = 30;
    let closed = closed_form_r0(N).map_err(|e| e.to_string())?;
    let table = count_tables(N, 0);
    for (n, expected) in CLOSED_PREFIX.iter().enumerate() {
        ensure!(closed[n] == BigUint::from(*expected), "z^{}: {}", n + 1, closed[n]);
    }
    for n in 1..=N {
        let c = &closed[n - 1];
        ensure!(*c == table.normal(n, 0), "n={n}: closed form {c} vs recurrence");
        ensure!(*c == tutte_count(n - 1), "n={n}: closed form {c} vs Tutte");
    }
    let series = cli(&["series", "--terms", "7"])?;
    let last = series.lines().last().unwrap_or_default();
    ensure!(last == "7\t24057\t24057\t24057\tMATCH", "series last row {last:?}");
    Ok(format!("n <= {N} agree, z^30 = {}", closed[N - 1]))
}

fn enumeration_oracle() -> Outcome {
    let got: Vec<_> = enumerate_npt(4, 1).into_iter().map(|(t, _)| t).collect();
    let got_set: BTreeSet<_> = got.iter().cloned().collect();
    let listed: Vec<_> = SIZE_FOUR_TERMS.iter().map(|s| term(&format!("[x]{s}"))).collect();
    let listed_set: BTreeSet<_> = listed.iter().cloned().collect();
    ensure!(got.len() == 54, "enumerated {} terms", got.len());
    ensure!(got_set.len() == 54, "enumeration has duplicates");
    ensure!(listed_set.len() == 54, "reference list has duplicates");
    if let Some(missing) = listed_set.difference(&got_set).next() {
        return Err(format!("{missing} not enumerated"));
    }
    let lines = cli(&["enumerate", "--size", "4", "--vars", "1"])?;
    ensure!(lines.lines().count() == 54, "CLI printed {} lines", lines.lines().count());
    Ok("54 terms match one-to-one".into())
}

fn map_closure_count() -> Outcome {
    let layers = maps_by_edges(5);
    let counts: Vec<usize> = layers.iter().map(Vec::len).collect();
    ensure!(counts == [1, 2, 9, 54, 378, 2916], "closure counts {counts:?}");
    for (e, n) in counts.iter().enumerate() {
        ensure!(BigUint::from(*n) == tutte_count(e), "{e} edges: {n} vs Tutte");
    }
    Ok(format!("{counts:?}"))
}

fn bijection_roundtrip() -> Outcome {
    let report = verify_bijection(6);
    if let Some(v) = report.violations.first() {
        return Err(format!(
            "{} violations, first at size {}: {} ({})",
            report.violations.len(),
            v.size,
            v.object,
            v.message
        ));
    }
    let expected = [1, 2, 9, 54, 378, 2916];
    let mut total = 0;
    for (s, want) in report.sizes.iter().zip(expected) {
        ensure!(
            s.terms == want
                && s.maps == want
                && s.term_roundtrips == want
                && s.map_roundtrips == want,
            "size {}: {s:?}",
            s.size
        );
        total += want;
    }
    ensure!(report.sizes.len() == 6, "{} sizes checked", report.sizes.len());
    Ok(format!("{total} pairs, zero exceptions"))
}

fn property_suites() -> Outcome {
    let layers = maps_by_edges(5);
    let mut checks = 0usize;

    for m in layers.iter().flatten() {
        let r = m.validate().map_err(|e| e.to_string())?;
        ensure!(
            r.vertices + r.faces == r.edges + 2,
            "Euler fails: {r:?}"
        );
        checks += 1;
    }

    for (e, layer) in layers.iter().enumerate().take(5) {
        for m in layer {
            match m.classify() {
                MapClass::VertexMap => ensure!(e == 0, "edged map classified as vertex"),
                MapClass::IsthmicRoot => {
                    let (a, b) = decompose_isthmic(m).map_err(|e| e.to_string())?;
                    ensure!(compose_isthmic(&a, &b) == *m, "isthmic recomposition differs");
                }
                MapClass::NonIsthmicRoot => {
                    let (a, k) = decompose_nonisthmic(m).map_err(|e| e.to_string())?;
                    let back = compose_nonisthmic(&a, k).map_err(|e| e.to_string())?;
                    ensure!(back == *m, "non-isthmic recomposition differs");
                }
            }
            checks += 1;
            for k in 0..=m.outer_face_degree() {
                let c = compose_nonisthmic(m, k).map_err(|e| e.to_string())?;
                let got = decompose_nonisthmic(&c).map_err(|e| e.to_string())?;
                ensure!(got == (m.clone(), k), "non-isthmic decomposition differs");
                checks += 1;
            }
        }
    }
    for e1 in 0..=4 {
        for e2 in 0..=4 - e1 {
            for m1 in &layers[e1] {
                for m2 in &layers[e2] {
                    let c = compose_isthmic(m1, m2);
                    let got = decompose_isthmic(&c).map_err(|e| e.to_string())?;
                    ensure!(got == (m1.clone(), m2.clone()), "isthmic decomposition differs");
                    checks += 1;
                }
            }
        }
    }

    let npts: Vec<Vec<Npt>> = (0..=5)
        .map(|n| {
            enumerate_npt(n, 1)
                .into_iter()
                .map(|(t, _)| Npt::new(t).expect("enumerated terms are NPTs"))
                .collect()
        })
        .collect();
    for s1 in 1..=4 {
        for s2 in 1..=5 - s1 {
            for t1 in &npts[s1] {
                for t2 in &npts[s2] {
                    let c = compose_fun_open(t1, t2);
                    ensure!(
                        c.size() == s1 + s2
                            && c.handle_count() == 1 + t1.handle_count() + t2.handle_count(),
                        "function-open arithmetic fails on {t1}, {t2}"
                    );
                    let got = decompose_fun_open(&c).map_err(|e| e.to_string())?;
                    ensure!(got == (t1.clone(), t2.clone()), "function-open roundtrip on {c}");
                    checks += 1;
                }
            }
        }
    }
    for t in npts.iter().take(5).flatten() {
        for k in 1..=t.handle_count() {
            let c = compose_val_open(t, k).map_err(|e| e.to_string())?;
            ensure!(
                c.size() == t.size() + 1 && c.handle_count() == k + 1,
                "value-open arithmetic fails on {t}, k={k}"
            );
            let got = decompose_val_open(&c).map_err(|e| e.to_string())?;
            ensure!(got == (t.clone(), k), "value-open roundtrip on {c}");
            checks += 1;
        }
    }
    for t in npts.iter().flatten() {
        let back = match t.classify() {
            Trichotomy::IdentityTerm => Npt::identity(),
            Trichotomy::FunctionOpen { .. } => {
                let (a, b) = decompose_fun_open(t).map_err(|e| e.to_string())?;
                compose_fun_open(&a, &b)
            }
            Trichotomy::ValueOpen { .. } => {
                let (a, k) = decompose_val_open(t).map_err(|e| e.to_string())?;
                compose_val_open(&a, k).map_err(|e| e.to_string())?
            }
        };
        ensure!(back == *t, "recomposition of {t} gave {back}");
        checks += 1;
    }

    for n in 0..=6 {
        for i in 0..=n + 1 {
            for (t, c) in enumerate_colored(Kind::Normal, n, i) {
                ensure!(c.size() == t.leaves(), "normal size != leaves for {t}");
                ensure!(is_planar(&t), "{t} is not planar");
                checks += 1;
            }
            for (t, c) in enumerate_colored(Kind::Neutral, n, i) {
                ensure!(c.size() + 1 == t.leaves(), "neutral size != leaves - 1 for {t}");
                checks += 1;
            }
        }
    }

    let seven = Npt::new(term("[y](y(λz.z))(λw.λu.λv.v(uw))")).map_err(|e| e.to_string())?;
    let seven_vo = [
        "[x]λy.((y(λz.z))(λw.λu.λv.v(uw)))x",
        "[x]λy.(y(λz.z))(λw.λu.λv.(v(uw))x)",
        "[x]λy.(y(λz.z))(λw.λu.λv.v((uw)x))",
        "[x]λy.(y(λz.z))(λw.λu.λv.v(u(wx)))",
        "[x]λy.((y(λz.z))x)(λw.λu.λv.v(uw))",
        "[x]λy.(y(λz.zx))(λw.λu.λv.v(uw))",
        "[x]λy.((yx)(λz.z))(λw.λu.λv.v(uw))",
    ];
    let four = Npt::new(term("[y]λz.λw.(wz)(λu.u(λv.vy))")).map_err(|e| e.to_string())?;
    let four_vo = [
        "[x]λy.λz.λw.((wz)(λu.u(λv.vy)))x",
        "[x]λy.λz.λw.(wz)(λu.(u(λv.vy))x)",
        "[x]λy.λz.λw.(wz)(λu.u(λv.(vy)x))",
        "[x]λy.λz.λw.(wz)(λu.u(λv.v(yx)))",
    ];
    for (base, listed) in [(&seven, &seven_vo[..]), (&four, &four_vo[..])] {
        ensure!(
            base.handle_count() == listed.len(),
            "{base} has {} handles",
            base.handle_count()
        );
        for (k, src) in listed.iter().enumerate() {
            let got = compose_val_open(base, k + 1).map_err(|e| e.to_string())?;
            ensure!(*got.term() == term(src), "handle {} of {base} gives {got}", k + 1);
        }
    }

    let ids = check_identities(20).map_err(|e| e.to_string())?;
    ensure!(ids.rows.len() == 21, "identities checked for {} rows", ids.rows.len());
    let table = count_tables(6, 1);
    let row: Vec<BigUint> = (0..=6).map(|n| table.neutral(n, 1)).collect();
    let want: Vec<BigUint> = [1u32, 1, 3, 14, 83, 570, 4318].into_iter().map(BigUint::from).collect();
    ensure!(row == want, "neutral row i=1: {row:?}");

    Ok(format!("{checks} object checks"))
}

fn negative_fixtures() -> Outcome {
    ensure!(!is_planar(&term("[x]λy.xy")), "[x]λy.xy accepted as planar");

    let (t, _) = colored("[y](y(λz.z))(λw.λu.λv.v(uw))", Kind::Normal);
    let u_focus = [Step::Arg, Step::Body, Step::Body, Step::Body, Step::Arg, Step::Fun];
    let wrapped = wrap_value_open(&t, &u_focus).map_err(|e| e.to_string())?;
    ensure!(!is_planar(&wrapped), "focus on u gave planar {wrapped}");

    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/torus.map");
    let text = std::fs::read_to_string(path).map_err(|e| e.to_string())?;
    match parse_map(&text) {
        Err(MapFileError::Invalid(MapError::NonPlanar { genus })) => {
            Ok(format!("all rejected (torus genus {genus})"))
        }
        other => Err(format!("torus fixture gave {other:?}")),
    }
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("count tables", Some(Duration::from_secs(5)), count_tables_match),
        ("sequence identity", Some(Duration::from_secs(2)), sequence_identity),
        ("enumeration oracle", Some(Duration::from_secs(1)), enumeration_oracle),
        ("map closure count", Some(Duration::from_secs(60)), map_closure_count),
        ("bijection roundtrip", Some(Duration::from_secs(120)), bijection_roundtrip),
        ("property suites", None, property_suites),
        ("negative fixtures", Some(Duration::from_secs(5)), negative_fixtures),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (idx, (name, budget, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|p| {
                let msg = p
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                Err(format!("panicked: {msg}"))
            })
            .and_then(|detail| {
                let took = start.elapsed();
                match budget {
                    Some(limit) if took > *limit => {
                        Err(format!("{detail}, but took {took:.2?} (budget {limit:?})"))
                    }
                    _ => Ok(detail),
                }
            });
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS in {took:.2?} ({detail})", idx + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL in {took:.2?} ({why})", idx + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
