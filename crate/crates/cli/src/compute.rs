use num_bigint::BigInt;
use poset_zeta::cycles::{alternating_sum, CycleEnumerator};
use poset_zeta::incidence::{
    mobius_matrix, symmetric_mobius_matrix, symmetric_zeta_matrix, zeta_matrix,
};
use poset_zeta::linalg::charpoly;
use poset_zeta::{IntMatrix, Poset};
use serde_json::Value;

use crate::report::{strings, Report};
use crate::{Failure, What};

fn matrix_value(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(strings).collect())
}

/// One line, rows separated by `;`.
pub fn compact(m: &IntMatrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| {
            r.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    rows.join("; ")
}

fn adjacency(p: &Poset) -> IntMatrix {
    symmetric_zeta_matrix(p)
        .sub(&IntMatrix::identity(p.len()).scale(&BigInt::from(2)))
        .expect("same shape")
}

pub fn run(
    report: &mut Report,
    p: &Poset,
    what: What,
    lengths: &[usize],
    cap: usize,
) -> Result<(), Failure> {
    let enumerator = CycleEnumerator::with_cap(cap);
    match what {
        What::Zeta => {
            let (z, sym) = report.timed("zeta", || (zeta_matrix(p), symmetric_zeta_matrix(p)));
            report.result("zeta", matrix_value(&z));
            report.result("symmetric", matrix_value(&sym));
        }
        What::Mobius => {
            let (m, sym) =
                report.timed("mobius", || (mobius_matrix(p), symmetric_mobius_matrix(p)));
            report.result("mobius", matrix_value(&m));
            report.result("symmetric", matrix_value(&sym));
            let inverse = zeta_matrix(p).inverse_unipotent_upper()?;
            report.check(
                "mobius matrix inverts zeta matrix",
                compact(&inverse),
                compact(&m),
            );
        }
        What::Det => {
            let z = report.timed("det zeta", || symmetric_zeta_matrix(p).det())?;
            let m = report.timed("det mobius", || symmetric_mobius_matrix(p).det())?;
            report.result("det", z.to_string());
            report.result("det_mobius", m.to_string());
            report.check("zeta and mobius symmetrizations", &z, &m);
        }
        What::Charpoly => {
            let chi = report.timed("charpoly", || charpoly(&adjacency(p)))?;
            report.result("a", strings(chi.coeffs()));
            report.result("polynomial", chi.to_string());
            if p.len() <= cap {
                let by_cycles =
                    report.timed("cycle counts", || enumerator.chi_via_cycle_counts(p))?;
                report.check("cycle-count expansion", &chi, &by_cycles);
            }
        }
        What::Cvec => {
            let c = report.timed("cycle covers", || enumerator.c_coefficients(p))?;
            let det = symmetric_zeta_matrix(p).det()?;
            report.result("c", strings(&c));
            report.check(
                "alternating sum equals det",
                &det,
                alternating_sum(p.len(), &c),
            );
        }
        What::Fcount => {
            if lengths.is_empty() {
                return Err(Failure::Input("--what fcount needs --lengths".into()));
            }
            let f = report.timed("cycle covers", || enumerator.f_count(p, lengths))?;
            report.result("lengths", Value::from(lengths.to_vec()));
            report.result("count", f.to_string());
        }
    }
    Ok(())
}
