use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{betti_table, BettiTable};
use crate::algebra::Ideal;
use crate::error::{Error, Result};
use crate::groebner::{is_unit, saturate_irrelevant};

/// `Sheaf` works with the saturation of the input; `Module` with the
/// input as given.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RegularityMode {
    #[default]
    Sheaf,
    Module,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityReport {
    /// The ideal whose Betti table is reported (the saturation in sheaf mode).
    pub ideal: String,
    pub saturated: bool,
    pub reg: i64,
    pub betti: BettiTable,
    /// Largest degree of a minimal generator of the saturation; 0 when the
    /// saturation is the unit ideal.
    pub dhat: u32,
}

impl RegularityReport {
    /// Whether the ideal used is the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.betti.get(0, 0) == 1
    }
}

fn unit_table() -> BettiTable {
    BettiTable::from_counts(BTreeMap::from([((0, 0), 1)]))
}

fn table_and_reg(ideal: &Ideal) -> Result<(BettiTable, i64)> {
    if is_unit(ideal)? {
        return Ok((unit_table(), 0));
    }
    let betti = betti_table(ideal)?;
    let reg = betti.regularity().unwrap_or(0);
    Ok((betti, reg))
}

/// Castelnuovo–Mumford regularity through graded Betti numbers.
pub fn regularity(ideal: &Ideal, mode: RegularityMode) -> Result<RegularityReport> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if !ideal.is_homogeneous() {
        return Err(Error::NotHomogeneous);
    }
    let sat = saturate_irrelevant(ideal)?;
    let (sat_betti, sat_reg) = table_and_reg(&sat)?;
    let dhat = sat_betti.max_generator_degree().unwrap_or(0);
    let report = match mode {
        RegularityMode::Sheaf => RegularityReport {
            ideal: sat.to_string(),
            saturated: true,
            reg: sat_reg,
            betti: sat_betti,
            dhat,
        },
        RegularityMode::Module => {
            let (betti, reg) = table_and_reg(ideal)?;
            RegularityReport {
                ideal: ideal.to_string(),
                saturated: false,
                reg,
                betti,
                dhat,
            }
        }
    };
    Ok(report)
}
