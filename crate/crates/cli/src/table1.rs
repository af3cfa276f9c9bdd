//! Rows of the B3*/B5* difference table and their CSV form.

use std::io::{Read, Write};

use alpha_spectra::alpha::format_alpha;
use alpha_spectra::families::{bstar3, bstar5};
use alpha_spectra::spectral::spectral_radius;
use alpha_spectra::{Rational, Result};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub alpha: String,
    pub rho_b3: f64,
    pub rho_b5: f64,
    /// `rho_b3 - rho_b5`
    pub dr: f64,
}

pub fn rows(n: usize, d: usize, alphas: &[Rational]) -> Result<Vec<Row>> {
    let (b3, b5) = (bstar3(n, d)?, bstar5(n, d)?);
    alphas
        .iter()
        .map(|a| {
            let rho_b3 = spectral_radius(&b3, a, 1e-12)?.radius;
            let rho_b5 = spectral_radius(&b5, a, 1e-12)?.radius;
            Ok(Row { alpha: format_alpha(a), rho_b3, rho_b5, dr: rho_b3 - rho_b5 })
        })
        .collect()
}

pub fn write_csv<W: Write>(rows: &[Row], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> csv::Result<Vec<Row>> {
    csv::Reader::from_reader(input).deserialize().collect()
}
