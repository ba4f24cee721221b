use num_bigint::BigInt;
use poset_zeta::bipoly::{lemma4_holds, param_zeta_det, BiPoly, FactoredDet, PARAM_DET_MAX_RANK};
use poset_zeta::cycles::CycleEnumerator;
use poset_zeta::families::{
    block_decomposition_check, boolean_det_closed_form, inflate_2x2, modified_stirling_sum,
    pascal_mod2_check, STRUCTURE_CHECK_MAX_RANK,
};
use poset_zeta::incidence::{symmetric_mobius_matrix, symmetric_zeta_matrix, zeta_matrix};
use poset_zeta::linalg::{charpoly, charpoly_by_interpolation};
use poset_zeta::random::random_corpus;
use poset_zeta::{IntMatrix, Poset};
use serde_json::{json, Value};

use crate::report::Report;
use crate::{Failure, Suite};

pub struct Bounds {
    pub max_n: Option<usize>,
    pub max_rank: Option<usize>,
    pub count: Option<usize>,
    pub seed: u64,
    pub cap: usize,
}

fn within(name: &str, value: usize, low: usize, high: usize) -> Result<usize, Failure> {
    if (low..=high).contains(&value) {
        Ok(value)
    } else {
        Err(Failure::Input(format!(
            "{name} must be in {low}..={high}, got {value}"
        )))
    }
}

pub fn run(report: &mut Report, suite: Suite, b: &Bounds) -> Result<(), Failure> {
    match suite {
        Suite::Theorem1 => theorem1(report, b),
        Suite::Theorem2 => theorem2(report, b),
        Suite::Chain => chain(report, b),
        Suite::Corollary1 => corollary1(report, b),
        Suite::Boolean => boolean(report, b),
        Suite::Lemma3 => lemma3(report, b),
        Suite::Lemma4 => lemma4(report, b),
        Suite::Eq6 => eq6(report, b),
    }
}

fn theorem1(report: &mut Report, b: &Bounds) -> Result<(), Failure> {
    let max_n = within("--max-n", b.max_n.unwrap_or(20), 1, 64)?;
    let count = b.count.unwrap_or(200);
    report.seed = Some(b.seed);
    let corpus = random_corpus(b.seed, count, 1, max_n);
    for (k, p) in corpus.iter().enumerate() {
        let (z, m) = report.timed(&format!("poset {k}"), || {
            (
                symmetric_zeta_matrix(p).det(),
                symmetric_mobius_matrix(p).det(),
            )
        });
        report.check(format!("random #{k} (n={})", p.len()), z?, m?);
    }
    Ok(())
}

fn three_way(p: &Poset, e: &CycleEnumerator) -> Result<(String, String), Failure> {
    let n = p.len();
    let z = symmetric_zeta_matrix(p);
    let adjacency = z.sub(&IntMatrix::identity(n).scale(&BigInt::from(2)))?;
    let chi = charpoly(&adjacency)?;
    let det = z.det()?;
    let expected = format!("chi = {chi}; det = {det}");

    let routes = [
        e.chi_via_permutations(p)?,
        e.chi_via_cycle_counts(p)?,
        charpoly_by_interpolation(&adjacency)?,
    ];
    let chi_actual = if routes.iter().all(|r| *r == routes[0]) {
        routes[0].to_string()
    } else {
        let all: Vec<String> = routes.iter().map(ToString::to_string).collect();
        all.join(" | ")
    };
    let by_covers = e.theorem2_det(p)?;
    let at_minus_two = chi.eval(&BigInt::from(-2));
    let det_actual = if by_covers == at_minus_two {
        by_covers.to_string()
    } else {
        format!("{by_covers} | chi(-2) = {at_minus_two}")
    };
    Ok((expected, format!("chi = {chi_actual}; det = {det_actual}")))
}

fn theorem2(report: &mut Report, b: &Bounds) -> Result<(), Failure> {
    let max_n = within("--max-n", b.max_n.unwrap_or(7), 1, b.cap)?;
    let count = b.count.unwrap_or(100);
    report.seed = Some(b.seed);
    let e = CycleEnumerator::with_cap(b.cap);
    for (k, p) in random_corpus(b.seed, count, 1, max_n).iter().enumerate() {
        let name = format!("random #{k} (n={})", p.len());
        match report.timed(&format!("poset {k}"), || three_way(p, &e)) {
            Ok((expected, actual)) => report.check(name, expected, actual),
            Err(Failure::Internal(msg)) => report.check(name, "agreement", msg),
            Err(other) => return Err(other),
        }
    }
    Ok(())
}

fn chain(report: &mut Report, b: &Bounds) -> Result<(), Failure> {
    let max_n = within("--max-n", b.max_n.unwrap_or(12), 1, 512)?;
    for n in 1..=max_n {
        let p = Poset::chain(n);
        let z = symmetric_zeta_matrix(&p).det()?;
        let m = symmetric_mobius_matrix(&p).det()?;
        let actual = if z == m {
            z.to_string()
        } else {
            format!("{z} | mobius {m}")
        };
        report.check(format!("chain {n}"), n + 1, actual);
    }
    Ok(())
}

fn corollary1(report: &mut Report, b: &Bounds) -> Result<(), Failure> {
    let max_n = within("--max-n", b.max_n.unwrap_or(10), 1, 12)?;
    for n in 1..=max_n {
        let sum = report.timed(&format!("n = {n}"), || modified_stirling_sum(n));
        report.check(format!("n = {n}"), n + 1, sum);
    }
    Ok(())
}

fn boolean(report: &mut Report, b: &Bounds) -> Result<(), Failure> {
    let max_rank = within(
        "--max-rank",
        b.max_rank.unwrap_or(8),
        0,
        STRUCTURE_CHECK_MAX_RANK,
    )?;
    for rank in 0..=max_rank {
        let expected = boolean_det_closed_form(rank)?;
        let p = Poset::boolean_algebra(rank)?;
        let det = report.timed(&format!("rank {rank}"), || symmetric_zeta_matrix(&p).det())?;
        report.check(format!("rank {rank}"), expected, det);
    }
    Ok(())
}

fn lemma3(report: &mut Report, b: &Bounds) -> Result<(), Failure> {
    let max_rank = within(
        "--max-rank",
        b.max_rank.unwrap_or(8),
        1,
        STRUCTURE_CHECK_MAX_RANK,
    )?;
    let mut inflated = IntMatrix::identity(1);
    for rank in 1..=max_rank {
        report.check(
            format!("pascal mod 2, rank {rank}"),
            true,
            pascal_mod2_check(rank)?,
        );
        report.check(
            format!("block decomposition, rank {rank}"),
            true,
            block_decomposition_check(rank)?,
        );
        inflated = inflate_2x2(&inflated)?;
        let z = zeta_matrix(&Poset::boolean_algebra(rank)?);
        report.check(format!("2x2 inflation, rank {rank}"), true, inflated == z);
    }
    Ok(())
}

fn triples(p: &BiPoly) -> Value {
    Value::Array(
        p.to_triples()
            .into_iter()
            .map(|(dx, dy, c)| json!([dx, dy, c]))
            .collect(),
    )
}

fn lemma4(report: &mut Report, b: &Bounds) -> Result<(), Failure> {
    let max_rank = within("--max-rank", b.max_rank.unwrap_or(5), 3, PARAM_DET_MAX_RANK)?;
    let dets = (1..=max_rank)
        .map(|r| report.timed(&format!("rank {r}"), || param_zeta_det(r)))
        .collect::<Result<Vec<_>, _>>()?;
    for r in 1..=max_rank - 2 {
        let holds = lemma4_holds(&dets[r - 1], &dets[r], &dets[r + 1]);
        report.check(format!("ranks {r}, {}, {}", r + 1, r + 2), true, holds);
    }
    Ok(())
}

fn eq6(report: &mut Report, b: &Bounds) -> Result<(), Failure> {
    let max_rank = within("--max-rank", b.max_rank.unwrap_or(5), 1, PARAM_DET_MAX_RANK)?;
    let mut table = Vec::new();
    for rank in 1..=max_rank {
        let det = report.timed(&format!("rank {rank}"), || param_zeta_det(rank))?;
        let predicted = FactoredDet::predicted(rank);
        report.check(format!("rank {rank}"), predicted.expand(), &det);
        table.push(json!({
            "rank": rank,
            "alpha": predicted.exponents.alpha.to_string(),
            "beta": predicted.exponents.beta.to_string(),
            "linear": predicted.linear.to_string(),
            "quadratic": predicted.quadratic.to_string(),
            "det": triples(&det),
        }));
    }
    report.result("factorizations", Value::Array(table));
    Ok(())
}
