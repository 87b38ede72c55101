//! System configuration: deployment geometry, traffic model and decoder
//! knobs, with file loading and validation.
//!
//! Defaults correspond to the full-scale simulation setup: a 3×3 grid of
//! 100 m zones, 40 access points with 4 antennas each, 20 users per zone
//! spread over 13 active messages drawn from 2^8 codewords of length 1024.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::path::Path;

/// Multiplicity sampler for the per-zone traffic draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum MultiplicityLaw {
    /// Multinomial over the active messages conditioned on every message
    /// getting at least one user (rejection sampling). This is the law the
    /// decoder prior is matched to.
    #[default]
    Exact,
    /// One guaranteed user per active message plus a multinomial for the
    /// remainder. Cheaper, but a *different* distribution; only use when
    /// sampling speed matters more than fidelity.
    Shifted,
}

/// Full parameter set for one simulation.
///
/// All fields are plain numbers so a config file is one `key = value` line
/// per field; missing keys fall back to the defaults below.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SystemConfig {
    /// Zones per side of the square deployment (total zones U = grid_dim²).
    pub grid_dim: usize,
    /// Side length of one square zone, meters.
    pub zone_side_m: f64,
    /// Antennas per access point (A).
    pub antennas_per_ap: usize,
    /// Path-loss reference distance d0, meters.
    pub pathloss_ref_dist_m: f64,
    /// Path-loss exponent.
    pub pathloss_exponent: f64,
    /// Codeword length N (channel uses per transmission).
    pub codeword_len: usize,
    /// Codebook size per zone, M.
    pub messages_per_zone: usize,
    /// Users per zone, all of which transmit.
    pub users_per_zone: usize,
    /// Distinct messages transmitted per zone.
    pub active_per_zone: usize,
    /// Largest multiplicity the decoder posterior considers (defaults to
    /// `users_per_zone`).
    pub multiplicity_cap: usize,
    /// Energy of each codeword (the per-symbol power is this divided by N).
    pub codeword_energy: f64,
    /// Received SNR at the access point nearest a zone centroid, in dB.
    pub snr_rx_db: f64,
    /// AMP iterations T.
    pub amp_iterations: usize,
    /// Monte-Carlo position samples per zone used by the denoiser.
    pub denoiser_samples: usize,
    /// How per-zone multiplicities are drawn.
    pub multiplicity_law: MultiplicityLaw,
}

impl Default for SystemConfig {
    fn default() -> Self {
        SystemConfig {
            grid_dim: 3,
            zone_side_m: 100.0,
            antennas_per_ap: 4,
            pathloss_ref_dist_m: 13.57,
            pathloss_exponent: 3.67,
            codeword_len: 1024,
            messages_per_zone: 256,
            users_per_zone: 20,
            active_per_zone: 13,
            multiplicity_cap: 20,
            codeword_energy: 1.0,
            snr_rx_db: -30.0,
            amp_iterations: 20,
            denoiser_samples: 500,
            multiplicity_law: MultiplicityLaw::Exact,
        }
    }
}

impl SystemConfig {
    /// Full-scale setup (same as `Default`).
    pub fn full() -> Self {
        Self::default()
    }

    /// Down-scaled setup for tests and quick experiments: 2×2 zones,
    /// 21 APs × 2 antennas, 6 users over 4 of 64 messages, N = 256,
    /// 100 denoiser samples, 10 iterations.
    pub fn reduced() -> Self {
        SystemConfig {
            grid_dim: 2,
            antennas_per_ap: 2,
            codeword_len: 256,
            messages_per_zone: 64,
            users_per_zone: 6,
            active_per_zone: 4,
            multiplicity_cap: 6,
            amp_iterations: 10,
            denoiser_samples: 100,
            ..Self::default()
        }
    }

    /// Number of zones U.
    pub fn zones(&self) -> usize {
        self.grid_dim * self.grid_dim
    }

    /// Total codewords across zones (U · M).
    pub fn total_codewords(&self) -> usize {
        self.zones() * self.messages_per_zone
    }

    /// Per-symbol transmit power P = codeword energy / N.
    pub fn symbol_power(&self) -> f64 {
        self.codeword_energy / self.codeword_len as f64
    }

    /// Load from a TOML-style `key = value` file; unknown keys are errors.
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let cfg: SystemConfig = toml::from_str(&text)
            .map_err(|e| Error::InvalidConfig(format!("{}: {e}", path.display())))?;
        cfg.validate()?;
        Ok(cfg)
    }

    /// Check internal consistency; every constructor path should call this.
    pub fn validate(&self) -> Result<()> {
        fn bad(msg: String) -> Result<()> {
            Err(Error::InvalidConfig(msg))
        }
        if self.grid_dim == 0 {
            return bad("grid_dim must be at least 1".into());
        }
        if !(self.zone_side_m > 0.0) {
            return bad(format!("zone_side_m must be positive, got {}", self.zone_side_m));
        }
        if self.antennas_per_ap == 0 {
            return bad("antennas_per_ap must be at least 1".into());
        }
        if !(self.pathloss_ref_dist_m > 0.0) || !(self.pathloss_exponent > 0.0) {
            return bad("path-loss reference distance and exponent must be positive".into());
        }
        if self.codeword_len == 0 {
            return bad("codeword_len must be at least 1".into());
        }
        if self.messages_per_zone == 0 {
            return bad("messages_per_zone must be at least 1".into());
        }
        if self.active_per_zone == 0 || self.active_per_zone > self.messages_per_zone {
            return bad(format!(
                "active_per_zone must be in 1..=messages_per_zone, got {} of {}",
                self.active_per_zone, self.messages_per_zone
            ));
        }
        if self.users_per_zone < self.active_per_zone {
            return bad(format!(
                "users_per_zone ({}) must cover active_per_zone ({})",
                self.users_per_zone, self.active_per_zone
            ));
        }
        if self.multiplicity_cap == 0 || self.multiplicity_cap > self.users_per_zone {
            return bad(format!(
                "multiplicity_cap must be in 1..=users_per_zone, got {}",
                self.multiplicity_cap
            ));
        }
        if !(self.codeword_energy > 0.0) {
            return bad("codeword_energy must be positive".into());
        }
        if !self.snr_rx_db.is_finite() {
            return bad("snr_rx_db must be finite".into());
        }
        if self.amp_iterations == 0 {
            return bad("amp_iterations must be at least 1".into());
        }
        if self.denoiser_samples == 0 {
            return bad("denoiser_samples must be at least 1".into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn defaults_validate_and_derive() {
        let cfg = SystemConfig::default();
        cfg.validate().unwrap();
        assert_eq!(cfg.zones(), 9);
        assert_eq!(cfg.total_codewords(), 9 * 256);
        assert!((cfg.symbol_power() - 1.0 / 1024.0).abs() < 1e-18);
        let r = SystemConfig::reduced();
        r.validate().unwrap();
        assert_eq!(r.zones(), 4);
    }

    #[test]
    fn file_roundtrip_and_partial_files() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "grid_dim = 2\nsnr_rx_db = -20.0\nmessages_per_zone = 64").unwrap();
        let cfg = SystemConfig::from_file(f.path()).unwrap();
        assert_eq!(cfg.grid_dim, 2);
        assert_eq!(cfg.messages_per_zone, 64);
        // Unspecified keys keep their defaults.
        assert_eq!(cfg.codeword_len, 1024);
        assert_eq!(cfg.multiplicity_law, MultiplicityLaw::Exact);
    }

    #[test]
    fn unknown_keys_and_bad_values_rejected() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "grid_dmi = 2").unwrap();
        assert!(SystemConfig::from_file(f.path()).is_err());

        let mut cfg = SystemConfig::default();
        cfg.active_per_zone = 300;
        assert!(cfg.validate().is_err());
        let mut cfg = SystemConfig::default();
        cfg.multiplicity_cap = 25;
        assert!(cfg.validate().is_err());
        let mut cfg = SystemConfig::default();
        cfg.zone_side_m = -1.0;
        assert!(cfg.validate().is_err());
    }
}
