use std::fmt::Write;

use serde_json::{json, Value};

use segre::beilinson::{self, chern_convergence, e1_table, monad_extract, MonadOutcome};
use segre::chow::{ch, chi};
use segre::cohomology::{cohom, cohom_bounds, cohom_table, Window};
use segre::flag::{
    chi_flag, cohom_flag, flag_invariants, resolution_shape_flag, ulrich_flag_checks, FlagBundle,
};
use segre::report::{Check, Status};
use segre::ulrich::{
    classify, extension_example, family, omega_identities, regularity_checks, resolution_shape, ulrich_certificate,
    UlrichProfile, BM_CONDITIONS, HW_CONDITIONS,
};
use segre::{parse, Error, Result};

use crate::{Command, Outcome, OutputRecord};

fn overall(checks: &[Check]) -> Outcome {
    if checks.iter().any(|c| c.status == Status::Indeterminate) {
        Outcome::Indeterminate
    } else if checks.iter().any(|c| c.status == Status::Fail) {
        Outcome::Fail
    } else {
        Outcome::Pass
    }
}

fn lines(checks: &[Check]) -> String {
    checks.iter().map(|c| format!("{c}\n")).collect()
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("records serialize")
}

fn record(command: &str, inputs: Value, results: Value, status: Outcome, text: String) -> OutputRecord {
    OutputRecord { command: command.into(), inputs, results, status, text, rows: vec![] }
}

pub fn run(cmd: &Command) -> Result<OutputRecord> {
    match cmd {
        Command::Cohom { expr, twist } => cohom_cmd(expr, twist.as_deref()),
        Command::Table { expr, window } => table_cmd(expr, window),
        Command::Chi { expr } => chi_cmd(expr),
        Command::Ulrich { expr } => ulrich_cmd(expr),
        Command::Profile { expr } => profile_cmd(expr),
        Command::Regularity { expr, bm, .. } => regularity_cmd(expr, *bm),
        Command::Beilinson { expr, collection } => beilinson_cmd(expr, collection),
        Command::Resolve { profile } => resolve_cmd(profile),
        Command::Orthogonality { collection } => orthogonality_cmd(collection),
        Command::Family { kind, rank } => family_cmd(kind, *rank),
        Command::Example { which } => example_cmd(which),
        Command::FlagCohom { expr } => flag_cohom_cmd(expr),
        Command::FlagUlrich { expr } => flag_ulrich_cmd(expr),
    }
}

fn cohom_cmd(expr: &str, twist: Option<&[i64]>) -> Result<OutputRecord> {
    let mut e = parse(expr)?;
    if let Some(&[m, n]) = twist {
        e = e.twist(m, n);
    }
    let inputs = json!({ "expr": expr, "twist": twist });
    match cohom(&e) {
        Ok(h) => {
            let text = format!("H({e}) = {h}\nchi = {}\n", h.euler());
            Ok(record("cohom", inputs, json!({ "bundle": e.to_string(), "h": h, "chi": h.euler() }), Outcome::Ok, text))
        }
        Err(Error::Indeterminate(reason)) => {
            let b = cohom_bounds(&e)?;
            let text = format!("H({e}) is between {} and {}\n{reason}\n", b.lower, b.upper);
            let results = json!({ "bundle": e.to_string(), "lower": b.lower, "upper": b.upper, "reason": reason });
            Ok(record("cohom", inputs, results, Outcome::Indeterminate, text))
        }
        Err(e) => Err(e),
    }
}

fn table_cmd(expr: &str, window: &[i64]) -> Result<OutputRecord> {
    let e = parse(expr)?;
    let w = Window { m: (window[0], window[1]), n: (window[2], window[3]) };
    let t = cohom_table(&e, w)?;
    let mut text = String::new();
    let mut rows = vec![["m", "n", "h0", "h1", "h2", "h3", "h4"].map(String::from).to_vec()];
    let mut entries = vec![];
    for ((m, n), h) in &t.entries {
        writeln!(text, "({m},{n}): {h}").expect("string");
        let mut row = vec![m.to_string(), n.to_string()];
        row.extend(h.0.iter().map(|x| x.to_string()));
        rows.push(row);
        entries.push(json!({ "m": m, "n": n, "h": h }));
    }
    let inputs = json!({ "expr": expr, "window": window });
    let mut rec = record("table", inputs, json!({ "entries": entries }), Outcome::Ok, text);
    rec.rows = rows;
    Ok(rec)
}

fn chi_cmd(expr: &str) -> Result<OutputRecord> {
    let e = parse(expr)?;
    let (x, c) = (chi(&e)?, ch(&e)?);
    let text = format!("chi({e}) = {x}\nch = {c}\n");
    Ok(record("chi", json!({ "expr": expr }), json!({ "chi": x, "ch": c.to_string() }), Outcome::Ok, text))
}

fn ulrich_cmd(expr: &str) -> Result<OutputRecord> {
    let e = parse(expr)?;
    let cert = ulrich_certificate(&e)?;
    let h0 = cohom(&e)?.get(0);
    let text = format!("{e}: rank {}, h0 = {h0}, Ulrich: {}\n{}", cert.rank, cert.is_ulrich(), lines(&cert.checks));
    let results = json!({ "rank": cert.rank, "h0": h0, "ulrich": cert.is_ulrich(), "checks": cert.checks });
    Ok(record("ulrich", json!({ "expr": expr }), results, overall(&cert.checks), text))
}

fn profile_cmd(expr: &str) -> Result<OutputRecord> {
    let e = parse(expr)?;
    let p = UlrichProfile::of(&e)?;
    let mut checks = p.invariant_checks();
    checks.extend(omega_identities(&e, &p));
    let branch = classify(&p);
    let branch_text = match &branch {
        Ok(b) => b.to_string(),
        Err(err) => format!("contradiction: {err}"),
    };
    let text = format!("{p}\nbranch: {branch_text}\n{}", lines(&checks));
    let results = json!({ "rank": p.rank, "a": p.a, "b": p.b, "branch": branch_text, "checks": checks });
    let status = if branch.is_err() { Outcome::Fail } else { overall(&checks) };
    Ok(record("profile", json!({ "expr": expr }), results, status, text))
}

fn regularity_cmd(expr: &str, bm: bool) -> Result<OutputRecord> {
    let e = parse(expr)?;
    let (name, conds): (&str, &[(usize, i64, i64)]) = if bm { ("bm", &BM_CONDITIONS) } else { ("hw", &HW_CONDITIONS) };
    let checks = regularity_checks(&e, conds)?;
    let text = lines(&checks);
    let results = json!({ "conditions": name, "checks": checks });
    Ok(record("regularity", json!({ "expr": expr, "conditions": name }), results, overall(&checks), text))
}

fn beilinson_cmd(expr: &str, name: &str) -> Result<OutputRecord> {
    let a = parse(expr)?;
    let c = beilinson::verified(name)?;
    let t = e1_table(&a, &c)?;
    let mut checks = chern_convergence(&t)?;
    let mut text = t.to_string();
    let mut results = json!({ "table": t });
    if name == "col13t" {
        match monad_extract(&t)? {
            MonadOutcome::Resolution(m) => {
                writeln!(text, "monad: {m}").expect("string");
                checks.extend(m.checks.iter().cloned());
                results["monad"] = to_json(&m);
            }
            MonadOutcome::NotDegenerate(why) => {
                writeln!(text, "monad: not degenerate ({why})").expect("string");
                results["monad"] = json!({ "not_degenerate": why });
            }
        }
    }
    text.push_str(&lines(&checks));
    results["checks"] = to_json(&checks);
    let mut rec = record("beilinson", json!({ "expr": expr, "collection": name }), results, overall(&checks), text);
    rec.rows = vec![["p", "q", "dim", "label"].map(String::from).to_vec()];
    for cell in &t.cells {
        let dim = cell.dim.map_or("?".to_string(), |d| d.to_string());
        rec.rows.push(vec![cell.p.to_string(), cell.q.to_string(), dim, cell.label.to_string()]);
    }
    Ok(rec)
}

fn resolve_cmd(profile: &str) -> Result<OutputRecord> {
    let p = UlrichProfile::parse_list(profile)?;
    let shape = resolution_shape(&p, None)?;
    let text = format!("{p}\n{shape}\n{}", lines(&shape.checks));
    let results = json!({ "rank": p.rank, "a": p.a, "b": p.b, "shape": shape.to_string(), "checks": shape.checks });
    Ok(record("resolve", json!({ "profile": profile }), results, overall(&shape.checks), text))
}

fn orthogonality_cmd(name: &str) -> Result<OutputRecord> {
    let c = beilinson::builtin(name)?;
    let (o, e, d) = (c.orthogonality()?, c.exceptionality()?, c.dual_characterization()?);
    let count = |v: &[Check]| v.iter().filter(|c| c.passed()).count();
    let mut text = format!(
        "{name} on {}: orthogonality {}/{}, exceptionality {}/{}, dual {}/{}\n",
        c.variety,
        count(&o),
        o.len(),
        count(&e),
        e.len(),
        count(&d),
        d.len()
    );
    let all: Vec<Check> = o.iter().chain(&e).chain(&d).cloned().collect();
    for ch in all.iter().filter(|c| !c.passed()) {
        writeln!(text, "{ch}").expect("string");
    }
    let results = json!({
        "variety": c.variety.to_string(),
        "orthogonality": { "passed": count(&o), "total": o.len() },
        "exceptionality": { "passed": count(&e), "total": e.len() },
        "dual": { "passed": count(&d), "total": d.len() },
        "checks": all,
    });
    Ok(record("orthogonality", json!({ "collection": name }), results, overall(&all), text))
}

fn family_cmd(kind: &str, rank: u64) -> Result<OutputRecord> {
    let k = kind.parse()?;
    let v = family(k, rank)?;
    let cert = ulrich_certificate(&v)?;
    // profiles are only defined for Ulrich bundles
    let p = if cert.is_ulrich() { Some(UlrichProfile::of(&v)?) } else { None };
    let mut text = format!("{k}, r = {rank}: {v}\nUlrich: {}\n", cert.is_ulrich());
    if let Some(p) = &p {
        writeln!(text, "{p}").expect("string");
    }
    text.push_str(&lines(&cert.checks));
    let results = json!({
        "bundle": v.to_string(),
        "rank": cert.rank,
        "ulrich": cert.is_ulrich(),
        "profile": p,
        "checks": cert.checks,
    });
    Ok(record("family", json!({ "kind": kind, "rank": rank }), results, overall(&cert.checks), text))
}

fn example_cmd(which: &str) -> Result<OutputRecord> {
    let w = which.parse()?;
    let r = extension_example(w)?;
    let mut text = format!("{w}: {}\next space dim {}\n", r.bundle, r.ext_space_dim);
    if let Some(p) = &r.profile {
        writeln!(text, "{p}").expect("string");
    }
    writeln!(text, "endomorphism bound {}", r.endomorphism_bound).expect("string");
    text.push_str(&lines(&r.checks));
    let results = json!({
        "bundle": r.bundle.to_string(),
        "ext_space_dim": r.ext_space_dim,
        "rank": r.certificate.rank,
        "ulrich": r.certificate.is_ulrich(),
        "profile": r.profile,
        "endomorphism_bound": r.endomorphism_bound,
        "checks": r.checks,
    });
    Ok(record("example", json!({ "which": which }), results, r.status().into(), text))
}

fn flag_cohom_cmd(expr: &str) -> Result<OutputRecord> {
    let f = FlagBundle::res(parse(expr)?);
    let h = cohom_flag(&f)?;
    let x = chi_flag(&f)?;
    let text = format!("H({f}) = {h}\nchi = {x}\n");
    Ok(record("flag-cohom", json!({ "expr": expr }), json!({ "h": h, "chi": x }), Outcome::Ok, text))
}

fn flag_ulrich_cmd(expr: &str) -> Result<OutputRecord> {
    let f = FlagBundle::res(parse(expr)?);
    let mut checks = ulrich_flag_checks(&f)?;
    let ulrich = checks.iter().all(Check::passed);
    let mut text = format!("{f}: Ulrich on F: {ulrich}\n");
    let mut results = json!({ "rank": f.rank()?, "ulrich": ulrich });
    if ulrich {
        let inv = flag_invariants(&f)?;
        let shape = resolution_shape_flag(inv, Some(&f))?;
        writeln!(text, "(a,b,c,d,e,f) = ({},{},{},{},{},{})\n{shape}", inv.a, inv.b, inv.c, inv.d, inv.e, inv.f)
            .expect("string");
        results["invariants"] = to_json(&inv);
        results["shape"] = json!(shape.to_string());
        checks.extend(shape.checks.iter().cloned());
    }
    text.push_str(&lines(&checks));
    results["checks"] = to_json(&checks);
    Ok(record("flag-ulrich", json!({ "expr": expr }), results, overall(&checks), text))
}
