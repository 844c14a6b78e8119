//! Reference values recomputed from scratch.

use seqmix::gen;
use seqmix::lineage::sequence_mixed_direct;
use seqmix::metrics;
use seqmix::moore::{classify_moore, moore_bound, MooreVerdict};
use seqmix::reduce::{figures, reduce};

use crate::table::Table;
use crate::Failure;

struct Check {
    name: String,
    expected: String,
    measured: String,
}

fn check(name: impl Into<String>, expected: impl ToString, measured: impl ToString) -> Check {
    Check {
        name: name.into(),
        expected: expected.to_string(),
        measured: measured.to_string(),
    }
}

fn diameter(g: &seqmix::MixedGraph) -> String {
    metrics::summary(g)
        .diameter
        .map_or("disconnected".into(), |d| d.to_string())
}

pub fn run() -> Result<(String, bool), Failure> {
    let mut checks = vec![
        check("M(4,4,3)", 521, moore_bound(4, 4, 3)?),
        check("M(4,3,3)", 344, moore_bound(4, 3, 3)?),
        check("M(4,3,2)", 53, moore_bound(4, 3, 2)?),
    ];
    for delta in [2u64, 3, 5] {
        let poly = delta.pow(4) + 5 * delta.pow(3) + 7 * delta.pow(2) + 4 * delta + 2;
        checks.push(check(
            format!("M(1,{delta},4) = d^4+5d^3+7d^2+4d+2"),
            poly,
            moore_bound(1, delta as u32, 4)?,
        ));
    }

    let bosak = gen::bosak()?;
    checks.push(check("|Bosak|", 18, bosak.order()));
    checks.push(check("Bosak diameter", 2, diameter(&bosak)));
    let class = classify_moore(&bosak)?;
    checks.push(check("Bosak is a Moore graph", true, class.verdict == MooreVerdict::Moore));

    let s1 = sequence_mixed_direct(&bosak, 1)?;
    let f = figures(&s1)?;
    checks.push(check("|S1(Bosak)|", 45, f.order));
    checks.push(check("S1(Bosak) degrees (undirected, directed)", "(4, 4)", format!("({}, {})", f.delta, f.delta_star)));
    checks.push(check("S1(Bosak) diameter", 3, diameter(&s1)));
    checks.push(check("S1(Bosak) Moore reference", 521, opt_big(f.moore_ref)));

    let m = reduce(&bosak, 1, 1)?.reduced;
    let f = figures(&m)?;
    checks.push(check("|S1_m(Bosak)|, r'=1", 45, f.order));
    checks.push(check("S1_m(Bosak) degrees (undirected, directed)", "(4, 3)", format!("({}, {})", f.delta, f.delta_star)));
    checks.push(check("S1_m(Bosak) diameter", 3, diameter(&m)));
    checks.push(check("S1_m(Bosak) Moore reference", 344, opt_big(f.moore_ref)));

    for delta in 2..=4 {
        let k = gen::kautz(delta, 2)?;
        let verdict = classify_moore(&k)?.verdict;
        checks.push(check(format!("K({delta},2) is a Moore graph"), true, verdict == MooreVerdict::Moore));
    }
    for delta in 2..=3usize {
        let s = sequence_mixed_direct(&gen::kautz(delta, 2)?, 2)?;
        checks.push(check(format!("|S2(K({delta},2))|"), delta.pow(3) * (delta + 1), s.order()));
    }
    let s = sequence_mixed_direct(&gen::kautz(2, 2)?, 2)?;
    checks.push(check("S2(K(2,2)) diameter", 4, diameter(&s)));

    let k9 = gen::complete_symmetric_digraph(9)?;
    let f = figures(&reduce(&k9, 2, 1)?.reduced)?;
    checks.push(check("S2_m(K9*) degrees (undirected, directed), r'=1", "(2, 7)", format!("({}, {})", f.delta, f.delta_star)));

    let mut table = Table::new(["check", "expected", "measured", "status"]);
    let mut all = true;
    for c in checks {
        let pass = c.expected == c.measured;
        all &= pass;
        table.row([c.name, c.expected, c.measured, if pass { "PASS" } else { "FAIL" }.to_string()]);
    }
    Ok((table.render(), all))
}

fn opt_big(v: Option<num_bigint::BigUint>) -> String {
    v.map_or("-".into(), |v| v.to_string())
}
