use clap::Args;

use smobius_core::{ArithmeticParams, MobiusError, NumericalSemigroup, Result};

/// How the semigroup is given on the command line.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct SemigroupArgs {
    /// Generators, comma separated (e.g. 3,4,5)
    #[arg(
        long,
        value_delimiter = ',',
        value_name = "G1,G2,...",
        allow_negative_numbers = true
    )]
    pub gens: Option<Vec<i64>>,

    /// Arithmetic sequence a,d,k for <a, a+d, ..., a+kd>
    #[arg(
        long,
        value_delimiter = ',',
        value_name = "A,D,K",
        allow_negative_numbers = true
    )]
    pub arith: Option<Vec<i64>>,
}

pub struct Input {
    pub semigroup: NumericalSemigroup,
    pub arithmetic: Option<ArithmeticParams>,
    /// Whether the semigroup came from `--arith`.
    pub explicit_arith: bool,
}

impl SemigroupArgs {
    pub fn resolve(&self) -> Result<Input> {
        if let Some(v) = &self.arith {
            let &[a, d, k] = &v[..] else {
                return Err(MobiusError::InvalidParameter(format!(
                    "--arith expects exactly three values a,d,k, got {}",
                    v.len()
                )));
            };
            let p = ArithmeticParams::new(a, d, k)?;
            return Ok(Input {
                semigroup: p.semigroup(),
                arithmetic: Some(p),
                explicit_arith: true,
            });
        }
        let gens = self.gens.as_deref().unwrap_or_default();
        let semigroup = NumericalSemigroup::new(gens)?;
        let arithmetic = semigroup.as_arithmetic();
        Ok(Input {
            semigroup,
            arithmetic,
            explicit_arith: false,
        })
    }
}
