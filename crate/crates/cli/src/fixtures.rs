//! Named fixtures for the command line: the embedded instances plus the
//! parameterized codimension-3 template family (`gorenstein-1`,
//! `gorenstein-2`, ...).

use stanley_core::complex::SimplicialComplex;
use stanley_core::fixtures as core_fixtures;
use stanley_core::gorenstein;
use stanley_core::ideal::MonomialIdeal;
use stanley_core::partitions::Partition;

pub struct Fixture {
    pub name: String,
    pub complex: SimplicialComplex,
    pub ideal: MonomialIdeal,
    /// The distinguished partition, when the instance carries one.
    pub partition: Option<Partition>,
}

pub const FIXTURE_NAMES: &[&str] = &["dunce-hat", "cylinder", "hachimori", "gorenstein-<m>"];

pub fn lookup(name: &str) -> Result<Fixture, String> {
    match name {
        "dunce-hat" => {
            let fx = core_fixtures::dunce_hat();
            Ok(Fixture {
                name: name.into(),
                complex: fx.complex,
                ideal: fx.ideal,
                partition: Some(fx.partition),
            })
        }
        "cylinder" => {
            let fx = core_fixtures::cylinder();
            Ok(Fixture {
                name: name.into(),
                complex: fx.complex,
                ideal: fx.ideal,
                partition: Some(fx.partition),
            })
        }
        "hachimori" => {
            let fx = core_fixtures::two_piece();
            let ideal = stanley_core::ideal::stanley_reisner_ideal(&fx.full);
            Ok(Fixture { name: name.into(), complex: fx.full, ideal, partition: None })
        }
        other => {
            if let Some(mstr) = other.strip_prefix("gorenstein-") {
                let m: u32 = mstr
                    .parse()
                    .map_err(|_| format!("bad fixture parameter in `{other}`"))?;
                let (ideal, complex) =
                    gorenstein::build_template(m).map_err(|e| e.to_string())?;
                return Ok(Fixture { name: other.into(), complex, ideal, partition: None });
            }
            Err(format!(
                "unknown fixture `{other}` (available: {})",
                FIXTURE_NAMES.join(", ")
            ))
        }
    }
}
