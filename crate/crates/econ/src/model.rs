//! The core profit/loss arithmetic, the battery trajectory, and the
//! block-time background model.

use serde::{Deserialize, Serialize};

use crate::types::{DeviceProfile, EconError, EconParams};

/// Profit of one mining session.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Profit {
    pub xmr: f64,
    pub usd: f64,
}

/// P = payout * (h * dt) / 1e6, with dt in seconds.
pub fn session_profit(hash_rate_hps: f64, duration_secs: f64, params: &EconParams) -> Profit {
    let xmr = params.payout_xmr_per_mhash * hash_rate_hps * duration_secs / 1e6;
    Profit {
        xmr,
        usd: xmr * params.xmr_price_usd,
    }
}

/// L = C * W * t_r * (b_n - b_c): the electricity cost of recharging the
/// battery share burned by mining on top of the baseline session drain.
pub fn session_loss(device: &DeviceProfile, alpha: f64, params: &EconParams) -> f64 {
    let drop = device.baseline_end_battery_pct - device.mining_end_battery(alpha);
    params.electricity_usd_per_wh
        * device.power_watts
        * device.recharge_hours_per_pct
        * drop.max(0.0)
}

/// Hashes required to earn a whole coin at the current payout.
pub fn hashes_for_one_xmr(params: &EconParams) -> f64 {
    1e6 / params.payout_xmr_per_mhash
}

const SECONDS_PER_YEAR: f64 = 365.0 * 24.0 * 3600.0;

/// Years of continuous hashing needed to earn one coin.
pub fn time_to_one_xmr(hash_rate_hps: f64, params: &EconParams) -> Result<f64, EconError> {
    if hash_rate_hps <= 0.0 {
        return Err(EconError::ZeroHashRate);
    }
    Ok(hashes_for_one_xmr(params) / (hash_rate_hps * SECONDS_PER_YEAR))
}

/// Monthly mining revenue of a site: every visit contributes its dwell time
/// at the visitor hash rate.
pub fn site_monthly_revenue(
    visits_per_month: f64,
    avg_visit_secs: f64,
    visitor_hash_rate_hps: f64,
    params: &EconParams,
) -> f64 {
    let total_hashes = visits_per_month * avg_visit_secs * visitor_hash_rate_hps;
    total_hashes * params.usd_per_hash()
}

/// Throttle setting for a battery simulation: mining at some alpha, or the
/// baseline with no miner at all.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Throttle {
    Off,
    Alpha(f64),
}

/// Piecewise-linear battery trajectory sampled every 30 seconds. The drain
/// rate is calibrated so the level at the reference session length equals
/// the profile's measured endpoint for the given throttle.
pub fn simulate_battery(
    device: &DeviceProfile,
    throttle: Throttle,
    duration_minutes: f64,
) -> Result<Vec<(f64, f64)>, EconError> {
    device.validate()?;
    let end_level = match throttle {
        Throttle::Off => device.baseline_end_battery_pct,
        Throttle::Alpha(a) => device.mining_end_battery(a),
    };
    let rate_per_min = (device.start_battery_pct - end_level) / device.session_minutes;
    if rate_per_min > 0.0 && device.start_battery_pct / rate_per_min < duration_minutes {
        return Err(EconError::BatteryExhausted);
    }
    let mut out = Vec::new();
    let mut t = 0.0;
    while t <= duration_minutes + 1e-9 {
        out.push((t * 60.0, device.start_battery_pct - rate_per_min * t));
        t += 0.5;
    }
    Ok(out)
}

/// Proof-of-work target arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowModel {
    pub target: f64,
    pub block_probability: f64,
    pub expected_hashes: f64,
    pub network_hash_rate_hps: f64,
    pub block_time_secs: f64,
}

/// P_r = target / 2^256, H = 1/P_r, T_B = 1/(P_r * H_r).
pub fn pow_block_model(target: f64, network_hash_rate_hps: f64) -> Result<PowModel, EconError> {
    if target <= 0.0 {
        return Err(EconError::ZeroTarget);
    }
    let space = 2f64.powi(256);
    if target > space {
        return Err(EconError::TargetTooLarge);
    }
    let p = target / space;
    Ok(PowModel {
        target,
        block_probability: p,
        expected_hashes: 1.0 / p,
        network_hash_rate_hps,
        block_time_secs: 1.0 / (p * network_hash_rate_hps),
    })
}
