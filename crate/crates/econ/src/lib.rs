//! Economics of in-browser mining: what a session earns the operator,
//! what it costs the visitor in battery, how long a coin takes at browser
//! hash rates, what site-scale traffic would yield, and the proof-of-work
//! block-time background.

pub mod fixtures;
mod model;
mod report;
mod types;

pub use model::{
    hashes_for_one_xmr, pow_block_model, session_loss, session_profit, simulate_battery,
    site_monthly_revenue, time_to_one_xmr, PowModel, Profit, Throttle,
};
pub use report::{session_report, RecordedDelta, SessionEconomics, SessionReport};
pub use types::{DeviceProfile, EconError, EconParams, ThrottlePoint};
