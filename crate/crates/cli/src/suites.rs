use std::str::FromStr;

use mirrorforge::{cohft, frob, genus1, ifun, loc, rmat, Report};

use crate::{per_theory, residues, RunConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Ipp,
    Zz,
    ClubSpade,
    Pf,
    Yukawa,
    Frobenius,
    Rmatrix,
    Genus1,
    Appendix,
    Residues,
    Tails,
}

pub const ALL_SUITES: &[Suite] = &[
    Suite::Ipp,
    Suite::Zz,
    Suite::ClubSpade,
    Suite::Pf,
    Suite::Yukawa,
    Suite::Frobenius,
    Suite::Rmatrix,
    Suite::Genus1,
    Suite::Appendix,
    Suite::Residues,
    Suite::Tails,
];

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "ipp" => Suite::Ipp,
            "zz" => Suite::Zz,
            "clubspade" => Suite::ClubSpade,
            "pf" => Suite::Pf,
            "yukawa" => Suite::Yukawa,
            "frobenius" => Suite::Frobenius,
            "rmatrix" => Suite::Rmatrix,
            "genus1" => Suite::Genus1,
            "appendix" => Suite::Appendix,
            "residues" => Suite::Residues,
            "tails" => Suite::Tails,
            _ => return Err(s.to_string()),
        })
    }
}

impl Suite {
    pub fn run(self, cfg: &RunConfig) -> Report {
        let n = cfg.order;
        match self {
            Suite::Ipp => ifun::verify_ipp(n),
            Suite::Zz => ifun::verify_zz_identity(n),
            Suite::ClubSpade => ifun::verify_club_spade(cfg.dmax.unwrap_or(12)),
            Suite::Pf => per_theory("pf", cfg, |th| ifun::picard_fuchs_check(cfg.kmax, th)),
            Suite::Yukawa => ifun::yukawa(n).1,
            Suite::Frobenius => frob::verify_frobenius(n),
            Suite::Rmatrix => rmat::verify_rmatrix(n),
            Suite::Genus1 => {
                let mut rep = Report::new("genus1");
                rep.absorb(genus1::verify_genus_one(n));
                rep.absorb(genus1::verify_comparison(n));
                rep.finish()
            }
            Suite::Appendix => cohft::verify_appendix(n),
            Suite::Residues => per_theory("residues", cfg, |th| residues(cfg, th)),
            Suite::Tails => per_theory("tails", cfg, |th| loc::tail_extraction(n, th)),
        }
    }
}
