//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::time::Instant;

use qmock_core::algebra::{int, LaurentPolyW, RationalFunctionW};
use qmock_core::hyperterm::{fine_expand_direct, fine_expand_recurrence, term_invert_q, term_expand, Monomial};
use qmock_core::oracles::{f_coeff_oracle, rank_distribution};
use qmock_core::special::{rank_series, standard_catalog, Recipe};
use qmock_core::verify::{find, registry, verify_identity, verify_list, verify_with};
use qmock_core::{QSeries, Status, WValue};

type Check = Result<String, String>;

fn ids_pass(ids: &[&str], order: i64) -> Check {
    for id in ids {
        let r = verify_identity(id, order, 5, 42).map_err(|e| e.to_string())?;
        if r.status != Status::Pass {
            return Err(r.line());
        }
    }
    Ok(format!("{} identities exact to q^{order}", ids.len()))
}

fn criterion1() -> Check {
    let start = Instant::now();
    let reports = verify_list(standard_catalog(), &registry(), 16, 5, 42);
    let secs = start.elapsed().as_secs_f64();
    if reports.len() < 34 {
        return Err(format!("only {} registry entries", reports.len()));
    }
    if let Some(bad) = reports.iter().find(|r| r.status != Status::Pass) {
        return Err(bad.line());
    }
    if secs > 300.0 {
        return Err(format!("took {secs:.1}s"));
    }
    Ok(format!("{} identities pass at order 16, seed 42, {secs:.1}s sequential", reports.len()))
}

fn criterion2() -> Check {
    ids_pass(&["f-eq-fstar", "fstar-inv", "f-inv", "phi-inv", "mtc-phi-f"], 20)
}

fn criterion3() -> Check {
    ids_pass(&["thm3.1a", "thm3.1b", "g2-mcintosh", "thm4.1b", "thm5.1a", "thm5.1b"], 20)
}

fn criterion4() -> Check {
    let ids = ["thm3.2a", "thm3.2b", "thm4.2a", "thm4.2b", "thm4.2c", "thm5.2a", "thm5.2b", "thm5.2c"];
    for id in ids {
        let (lhs, _) = find(id).map_err(|e| e.to_string())?.sides(&[]);
        match lhs {
            Recipe::Inverted(inner) if matches!(*inner, Recipe::Named(_)) => {}
            other => return Err(format!("{id}: left side is not a mechanically inverted entry: {other:?}")),
        }
    }
    ids_pass(&ids, 16)
}

fn criterion5() -> Check {
    let r = rank_series(&WValue::Symbolic, 12).map_err(|e| e.to_string())?;
    for n in 0..=12 {
        let d = rank_distribution(n).map_err(|e| e.to_string())?;
        let poly = LaurentPolyW::from_terms(d.iter().map(|(&m, &k)| (m, int(k as i64))));
        let want = RationalFunctionW::normalize(&poly, &LaurentPolyW::one()).map_err(|e| e.to_string())?;
        if r.coeff(n).map_err(|e| e.to_string())? != want {
            return Err(format!("R(w;q) coefficient of q^{n} differs from enumeration"));
        }
    }
    let f = standard_catalog().series("f", &WValue::Symbolic, 30).map_err(|e| e.to_string())?;
    for n in 0..=30 {
        let want = RationalFunctionW::from_i64(f_coeff_oracle(n).map_err(|e| e.to_string())?);
        if f.coeff(n).map_err(|e| e.to_string())? != want {
            return Err(format!("f coefficient of q^{n} differs from rank parity"));
        }
    }
    // p(n) by Euler's recurrence, independent of the enumerator
    let mut p = vec![1i64];
    for n in 1..=20i64 {
        let mut acc = 0;
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > n {
                break;
            }
            let s = if k % 2 == 1 { 1 } else { -1 };
            acc += s * p[(n - g1) as usize];
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= n {
                acc += s * p[(n - g2) as usize];
            }
        }
        p.push(acc);
    }
    for n in 0..=20 {
        let total: u64 = rank_distribution(n).map_err(|e| e.to_string())?.values().sum();
        if total as i64 != p[n as usize] {
            return Err(format!("sum of R(m,{n}) is {total}, p({n}) = {}", p[n as usize]));
        }
    }
    Ok("R(w;q) to q^12, f to q^30 and p(n) to n = 20 match enumeration".into())
}

fn criterion6() -> Check {
    ids_pass(&["pentagonal", "jtp"], 30)
}

fn criterion7() -> Check {
    let cat = standard_catalog();
    let mut terms = Vec::new();
    for e in cat.entries() {
        collect_terms(&e.recipe, &mut terms);
    }
    let mut checked = 0;
    for t in &terms {
        let Ok(inv) = term_invert_q(t) else { continue };
        let Ok(back) = term_invert_q(&inv) else { continue };
        let a = term_expand(t, 10, &WValue::Symbolic);
        let b = term_expand(&back, 10, &WValue::Symbolic);
        match (a, b) {
            (Ok(a), Ok(b)) if a == b => checked += 1,
            (Ok(_), Ok(_)) => return Err(format!("double inversion changes {t:?}")),
            _ => {}
        }
    }
    let w = WValue::Symbolic;
    for (a, b) in [(Monomial::int(1, 1, 0), Monomial::int(-1, 0, 1)), (Monomial::zero(), Monomial::int(2, -1, 0))] {
        let t = Monomial::int(1, 1, 1);
        let x = fine_expand_direct(&a, &b, &t, 1, 12, &w).map_err(|e| e.to_string())?;
        let y = fine_expand_recurrence(&a, &b, &t, 1, 12, &w).map_err(|e| e.to_string())?;
        if x != y {
            return Err("Fine direct and recurrence paths disagree".into());
        }
    }
    let r = rank_series(&w, 12).map_err(|e| e.to_string())?;
    for (k, c) in r.terms() {
        if c.substitute(&int(1), -1).map_err(|e| e.to_string())? != *c {
            return Err(format!("R coefficient of q^{k} is not w-symmetric"));
        }
    }
    let specials = ["psi1-spec", "s2-spec", "psi4-rel", "psi3-theta", "psi2-theta"];
    ids_pass(&specials, 20)?;
    Ok(format!(
        "double inversion on {checked} catalog terms, Fine dual path, R symmetry, {} specialization identities at q^20",
        specials.len()
    ))
}

fn collect_terms(r: &Recipe, out: &mut Vec<qmock_core::HypergeometricTerm>) {
    match r {
        Recipe::Term(t) => out.push(t.clone()),
        Recipe::Inverted(x)
        | Recipe::SubW { inner: x, .. }
        | Recipe::SubQ { inner: x, .. }
        | Recipe::AtW { inner: x, .. }
        | Recipe::Scale(_, x)
        | Recipe::Reciprocal(x) => collect_terms(x, out),
        Recipe::Sum(rs) | Recipe::Prod(rs) => rs.iter().for_each(|x| collect_terms(x, out)),
        _ => {}
    }
}

fn criterion8() -> Check {
    let base = standard_catalog();
    let idents = registry();
    let order = 12;
    let mut sites = 0;
    for entry in base.entries() {
        let touching: Vec<_> = idents.iter().filter(|i| i.touches(base, &entry.name)).collect();
        for site in 0..base.sign_sites(&entry.name).map_err(|e| e.to_string())? {
            let cat = base.mutated(&entry.name, site).map_err(|e| e.to_string())?;
            let mut caught = false;
            for ident in &touching {
                let rep = verify_with(&cat, ident, order, 2, 42);
                if let (Status::Fail, Some(m)) = (rep.status, &rep.mismatch) {
                    let k = smallest_difference(&cat, ident, order)?;
                    if Some(m.q_power) != k {
                        return Err(format!("{} site {site}: mismatch at q^{} not the smallest", entry.name, m.q_power));
                    }
                    caught = true;
                    break;
                }
            }
            if !caught {
                return Err(format!("flipping sign site {site} of `{}` goes unnoticed", entry.name));
            }
            sites += 1;
        }
    }
    Ok(format!("all {sites} single-sign mutations detected at their first differing power"))
}

/// First power where the two sides differ, by subtraction.
fn smallest_difference(
    cat: &qmock_core::Catalog,
    ident: &qmock_core::Identity,
    order: i64,
) -> Result<Option<i64>, String> {
    if !ident.extra_params.is_empty() {
        // sampled: trust the harness ordering; both sides depend on draws
        return Ok(verify_with(cat, ident, order, 2, 42).mismatch.map(|m| m.q_power));
    }
    let (l, r) = ident.sides(&[]);
    let ev = cat.evaluator();
    let a = ev.eval(&l, order, &WValue::Symbolic).map_err(|e| e.to_string())?;
    let b = ev.eval(&r, order, &WValue::Symbolic).map_err(|e| e.to_string())?;
    let d: QSeries = a.sub(&b);
    let first = d.terms().map(|(k, _)| k).find(|&k| k <= order);
    Ok(first)
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("full-suite verification", criterion1),
        ("f / f* / phi chain at order 20", criterion2),
        ("inside-disc theorems, symbolic w, order 20", criterion3),
        ("inverted theorems via randq + Fine shift, order 16", criterion4),
        ("oracle equivalence", criterion5),
        ("pentagonal and triple product, order 30", criterion6),
        ("property suites", criterion7),
        ("mutation sensitivity", criterion8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
