//! Spectroscopic constants, unit conversions, and the potential
//! parameterization.
//!
//! A molecule is specified by its reduced mass `μ` (tabulated in units of
//! 10⁻²³ g), dissociation energy `D₀` (cm⁻¹), and equilibrium bond length
//! `r₀` (Å). Everything downstream works in Hartree atomic units, so the
//! conversion constants centralized here are the single source of truth
//! for the whole crate — they are hashed into CSV metadata headers by the
//! CLI so outputs can be audited against the constants that produced them.
//!
//! The potential itself is `v(r) = x/r + y/r² + z` with
//! `x = -2 D₀ r₀`, `y = D₀ r₀²`, and `z` either `D₀` (Mie form, energies
//! measured from the well bottom's dissociation limit) or `0` (Kratzer-Fues
//! form). Both describe the same well shifted by a constant.

/// Bohr radii per ångström.
pub const BOHR_PER_ANGSTROM: f64 = 1.889726124565062;
/// Hartree per cm⁻¹.
pub const HARTREE_PER_INVCM: f64 = 4.556335252912e-6;
/// Grams per unified atomic mass unit.
pub const GRAM_PER_AMU: f64 = 1.66053906660e-24;
/// Electron masses per unified atomic mass unit.
pub const ME_PER_AMU: f64 = 1822.888486209;

/// One molecule's spectroscopic constants, already converted to atomic
/// units.
#[derive(Debug, Clone, PartialEq)]
pub struct MoleculeRecord {
    pub name: String,
    /// Ground-state term symbol as given in the data file (informational).
    pub term: String,
    /// Reduced mass in electron masses.
    pub mu: f64,
    /// Dissociation energy in Hartree.
    pub d0: f64,
    /// Equilibrium bond length in Bohr.
    pub r0: f64,
}

/// Which constant offset the potential carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialForm {
    /// `z = D₀`: the well tends to `D₀` at infinity and bound energies are
    /// positive.
    Mie,
    /// `z = 0`: the well tends to `0` at infinity and bound energies are
    /// negative.
    KratzerFues,
}

impl PotentialForm {
    pub fn label(self) -> &'static str {
        match self {
            PotentialForm::Mie => "mie",
            PotentialForm::KratzerFues => "kratzer-fues",
        }
    }
}

/// Coefficients of `v(r) = x/r + y/r² + z` plus the reduced mass, all in
/// atomic units. This is the complete input to the bound-state solver.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    /// Reduced mass in electron masses.
    pub mu: f64,
}

impl PotentialParams {
    /// The potential value at radius `r` (Bohr).
    pub fn v(&self, r: f64) -> f64 {
        self.x / r + self.y / (r * r) + self.z
    }
}

impl MoleculeRecord {
    /// Construct from raw tabulated units: `μ` in 10⁻²³ g, `D₀` in cm⁻¹,
    /// `r₀` in Å.
    pub fn from_tabulated(name: &str, term: &str, mu_1e23_g: f64, d0_invcm: f64, r0_ang: f64) -> Self {
        MoleculeRecord {
            name: name.to_string(),
            term: term.to_string(),
            mu: mu_1e23_g * 1e-23 / GRAM_PER_AMU * ME_PER_AMU,
            d0: d0_invcm * HARTREE_PER_INVCM,
            r0: r0_ang * BOHR_PER_ANGSTROM,
        }
    }

    /// Potential coefficients for the requested form.
    pub fn potential(&self, form: PotentialForm) -> PotentialParams {
        PotentialParams {
            x: -2.0 * self.d0 * self.r0,
            y: self.d0 * self.r0 * self.r0,
            z: match form {
                PotentialForm::Mie => self.d0,
                PotentialForm::KratzerFues => 0.0,
            },
            mu: self.mu,
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum ParseError {
    #[error("line {line}: expected 4 or 5 whitespace-separated fields, found {found}")]
    FieldCount { line: usize, found: usize },
    #[error("line {line}: cannot parse `{token}` as a number")]
    BadNumber { line: usize, token: String },
    #[error("line {line}: `{field}` must be positive, got {value}")]
    NonPositive {
        line: usize,
        field: &'static str,
        value: f64,
    },
    #[error("line {line}: molecule `{name}` already defined")]
    Duplicate { line: usize, name: String },
}

/// Parse a molecule data file.
///
/// Format: one molecule per line, `#` starts a comment, blank lines are
/// skipped. Fields are whitespace-separated: either
/// `name mu(1e-23 g) D0(cm^-1) r0(angstrom)` or the same with a term-symbol
/// field after the name.
pub fn parse_molecule_file(text: &str) -> Result<Vec<MoleculeRecord>, ParseError> {
    let mut records: Vec<MoleculeRecord> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let (name, term, nums) = match fields.len() {
            4 => (fields[0], "", &fields[1..4]),
            5 => (fields[0], fields[1], &fields[2..5]),
            found => return Err(ParseError::FieldCount { line, found }),
        };
        let mut parsed = [0.0_f64; 3];
        for (slot, token) in parsed.iter_mut().zip(nums) {
            *slot = token.parse().map_err(|_| ParseError::BadNumber {
                line,
                token: token.to_string(),
            })?;
        }
        let field_names = ["reduced mass", "dissociation energy", "bond length"];
        for (field, &value) in field_names.iter().zip(&parsed) {
            if value <= 0.0 {
                return Err(ParseError::NonPositive { line, field, value });
            }
        }
        if records.iter().any(|r| r.name == name) {
            return Err(ParseError::Duplicate {
                line,
                name: name.to_string(),
            });
        }
        records.push(MoleculeRecord::from_tabulated(
            name, term, parsed[0], parsed[1], parsed[2],
        ));
    }
    Ok(records)
}

/// The molecules shipped with the crate.
pub fn builtin_molecules() -> Vec<MoleculeRecord> {
    parse_molecule_file(include_str!("../data/molecules.dat"))
        .expect("bundled molecule data must parse")
}

/// Look up a molecule by exact name.
pub fn find<'a>(records: &'a [MoleculeRecord], name: &str) -> Option<&'a MoleculeRecord> {
    records.iter().find(|r| r.name == name)
}
