//! The tables reproduced by `stringy table ...`.

use stringy_core::global::{
    goryunov_estr, goryunov_nodes, segre_knorrer_estr, solids_table as solid_rows,
};
use stringy_core::localsing::SingularityType;
use stringy_core::stringy::{conjrem_estr, estr_euler, ind_str, m_of, EulerMethod};
use stringy_core::{Error, Rational, Result};

use crate::render::Table;

/// `e_str` of `A(n, 2, r)` for `1 <= n <= n_max`, by the parity formula,
/// checked against the resolution.
pub fn conjrem(r: u32, n_max: u32) -> Result<Table> {
    let mut t = Table::new(&["r", "n", "m", "e_str", "ind_str"]);
    for n in 1..=n_max {
        let s = SingularityType::new(r, n, 2)?;
        let e = conjrem_estr(r, n)?;
        let structural = estr_euler(&s, EulerMethod::Structural)?;
        if structural != e {
            return Err(Error::InvalidParameters(format!(
                "parity formula {e} disagrees with the resolution value {structural} for {s}"
            )));
        }
        t.push(vec![r.into(), n.into(), m_of(&s)?.into(), e.clone().into(), ind_str(&e).into()]);
    }
    Ok(t)
}

pub fn solids() -> Result<Table> {
    let mut t = Table::new(&["solid", "N", "t3", "t4", "e_str_d2", "e_str_d3"]);
    for row in solid_rows()? {
        t.push(vec![
            row.solid.label.into(),
            row.solid.n_ambient.into(),
            row.solid.t3.into(),
            row.t4.into(),
            row.estr_d2.into(),
            row.estr_d3.into(),
        ]);
    }
    Ok(t)
}

/// Entries where the printed table disagrees with its own case formula.
const SEGRE_KNORRER_MISPRINTS: [(u32, &str); 1] = [(7, "paper_discrepancy: printed as 96/4")];

pub fn segre_knorrer() -> Result<Table> {
    let mut t = Table::new(&["n", "e_str", "local_e_str", "note"]);
    for n in 4..=15u32 {
        let e = segre_knorrer_estr(n)?;
        let local = &e - Rational::from_integer((n - 1).into());
        let note = SEGRE_KNORRER_MISPRINTS
            .iter()
            .find(|(k, _)| *k == n)
            .map_or("", |(_, note)| note);
        t.push(vec![n.into(), e.into(), local.into(), note.into()]);
    }
    Ok(t)
}

pub fn goryunov(n_ambient: u32) -> Result<Table> {
    let mut t = Table::new(&["N", "kappa", "nodes", "e_str", "ind_str"]);
    for kappa in 0..=n_ambient {
        let e = goryunov_estr(n_ambient, kappa)?;
        t.push(vec![
            n_ambient.into(),
            kappa.into(),
            goryunov_nodes(n_ambient, kappa).into(),
            e.clone().into(),
            ind_str(&e).into(),
        ]);
    }
    Ok(t)
}
