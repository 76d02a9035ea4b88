//! Subcommand implementations. Exit codes: 0 success, 1 input error, 2
//! internal failure.

use std::collections::BTreeMap;
use std::io::Read;

use serde::Serialize;
use serde_json::json;

use crate::cli::*;
use crate::config::load_config;
use crate::CliError;

fn write_out(path: &Option<String>, content: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, content)
            .map_err(|e| CliError::input(format!("cannot write {p}: {e}"))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn read_source(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::input(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{path}: {e}")))
    }
}

// ----- features -------------------------------------------------------------

pub fn features(args: &FeaturesArgs) -> Result<(), CliError> {
    let inputs: Vec<String> = if args.files.is_empty() {
        vec!["-".to_string()]
    } else {
        args.files.clone()
    };
    let mut vectors = Vec::new();
    for path in &inputs {
        let source = read_source(path)?;
        let fv = jsmetrics::compute_features(&source)
            .map_err(|e| CliError::input(format!("{path}: {e}")))?;
        let label = args.label.clone().unwrap_or_else(|| {
            if path == "-" {
                "stdin".to_string()
            } else {
                path.clone()
            }
        });
        vectors.push((label, fv));
    }
    let content = if args.json {
        let rows: Vec<serde_json::Value> = vectors
            .iter()
            .map(|(label, fv)| {
                let mut fields = serde_json::Map::new();
                for (name, value) in jsmetrics::FEATURE_NAMES.iter().zip(fv.as_array()) {
                    fields.insert(name.to_string(), json!(value));
                }
                fields.insert("label".to_string(), json!(label));
                serde_json::Value::Object(fields)
            })
            .collect();
        to_json(&rows)
    } else {
        jsmetrics::export_feature_matrix(&vectors)
    };
    write_out(&args.output, &content)
}

// ----- correlate / select-features ------------------------------------------

fn load_matrix(path: &str) -> Result<Vec<(String, jsmetrics::FeatureVector)>, CliError> {
    let text = read_source(path)?;
    jsmetrics::parse_feature_matrix(&text).map_err(|e| CliError::input(e.to_string()))
}

fn class_matrices(
    rows: &[(String, jsmetrics::FeatureVector)],
) -> BTreeMap<String, featurestats::FeatureMatrix> {
    let names: Vec<String> = jsmetrics::FEATURE_NAMES.iter().map(|s| s.to_string()).collect();
    let mut by_class: BTreeMap<String, Vec<Vec<f64>>> = BTreeMap::new();
    for (label, fv) in rows {
        by_class
            .entry(label.clone())
            .or_default()
            .push(fv.as_array().to_vec());
    }
    by_class
        .into_iter()
        .map(|(label, rows)| {
            (
                label,
                featurestats::FeatureMatrix::new(names.clone(), rows)
                    .expect("rows are rectangular by construction"),
            )
        })
        .collect()
}

pub fn correlate(args: &CorrelateArgs) -> Result<(), CliError> {
    let rows = load_matrix(&args.input)?;
    let mut report = Vec::new();
    for (label, matrix) in class_matrices(&rows) {
        let (corr, warnings) = featurestats::class_correlation(&matrix)
            .map_err(|e| CliError::input(format!("class {label}: {e}")))?;
        if let Some(dir) = &args.out_dir {
            std::fs::create_dir_all(dir)
                .map_err(|e| CliError::input(format!("{dir}: {e}")))?;
            let path = format!("{dir}/correlation_{label}.csv");
            std::fs::write(&path, corr.to_csv())
                .map_err(|e| CliError::input(format!("{path}: {e}")))?;
        }
        report.push(json!({
            "class": label,
            "features": corr.feature_names,
            "values": corr.values,
            "degenerate_features": warnings.iter().map(|w| w.feature.clone()).collect::<Vec<_>>(),
        }));
    }
    if args.json || args.out_dir.is_none() {
        print!("{}", to_json(&report));
    }
    Ok(())
}

pub fn select_features(args: &SelectArgs) -> Result<(), CliError> {
    let rows = load_matrix(&args.input)?;
    let classes = class_matrices(&rows);
    let pick = |label: &str| -> Result<featurestats::CorrelationMatrix, CliError> {
        let m = classes
            .get(label)
            .ok_or_else(|| CliError::input(format!("input has no '{label}' rows")))?;
        featurestats::class_correlation(m)
            .map(|(c, _)| c)
            .map_err(|e| CliError::input(e.to_string()))
    };
    let selection = featurestats::select_features(
        &pick("cryptojacking")?,
        &pick("malicious")?,
        &pick("benign")?,
        featurestats::SelectOptions {
            exclude_diagonal: args.exclude_diagonal,
            ..Default::default()
        },
    )
    .map_err(|e| CliError::input(e.to_string()))?;
    print!("{}", to_json(&selection));
    Ok(())
}

// ----- cluster ---------------------------------------------------------------

pub fn cluster(args: &ClusterArgs) -> Result<(), CliError> {
    let rows = load_matrix(&args.input)?;
    let data: Vec<Vec<f64>> = rows.iter().map(|(_, fv)| fv.as_array().to_vec()).collect();
    let labels: Vec<String> = rows.iter().map(|(l, _)| l.clone()).collect();
    let normalization = match args.normalization {
        NormalizationArg::Zscore => fcm::Normalization::ZScore,
        NormalizationArg::Sphere => fcm::Normalization::SphereZScore,
    };
    let opts = fcm::FitOptions {
        clusters: args.clusters,
        fuzzifier: args.fuzzifier,
        restarts: args.restarts,
        seed: args.seed,
        ..Default::default()
    };
    let (model, _) = fcm::cluster_features(&data, normalization, &opts)
        .map_err(|e| CliError::input(e.to_string()))?;

    if let Some(path) = &args.projection {
        let projection = fcm::project_2d(&data).map_err(|e| CliError::input(e.to_string()))?;
        let mut csv = String::from("pc1,pc2,label\n");
        for (point, label) in projection.coords.iter().zip(&labels) {
            csv.push_str(&format!("{},{},{label}\n", point[0], point[1]));
        }
        std::fs::write(path, csv).map_err(|e| CliError::input(format!("{path}: {e}")))?;
    }

    let evaluation = if args.evaluate {
        Some(fcm::evaluate(&model, &labels).map_err(|e| CliError::input(e.to_string()))?)
    } else {
        None
    };
    let report = json!({
        "objective": model.objective,
        "iterations": model.iterations,
        "converged": model.converged,
        "seed": model.seed,
        "assignments": model.hard_assignments(),
        "evaluation": evaluation,
    });
    print!("{}", to_json(&report));
    Ok(())
}

// ----- detect ----------------------------------------------------------------

pub fn detect(args: &DetectArgs) -> Result<(), CliError> {
    let text = match &args.log {
        Some(p) => read_source(p)?,
        None => read_source("-")?,
    };
    let entries =
        mineproto::log_from_jsonl(&text).map_err(|e| CliError::input(e.to_string()))?;
    let mut detector = mineproto::ContentDetector::new();
    let mut content = detector.verdict();
    for e in &entries {
        content = detector.step(&e.frame, e.ts_ms);
    }
    let blacklist_verdict = match (&args.blacklist, &args.endpoint) {
        (Some(path), Some(endpoint)) => {
            let list = mineproto::parse_blacklist(&read_source(path)?);
            Some(mineproto::blacklist_detector(endpoint, &list))
        }
        (Some(_), None) | (None, Some(_)) => {
            return Err(CliError::input(
                "blacklist detection needs both --blacklist and --endpoint".to_string(),
            ))
        }
        (None, None) => None,
    };
    let report = json!({
        "frames": entries.len(),
        "content": content,
        "blacklist": blacklist_verdict,
    });
    print!("{}", to_json(&report));
    Ok(())
}

// ----- simulate --------------------------------------------------------------

pub fn simulate(args: &SimulateArgs) -> Result<(), CliError> {
    let config = match &args.scenario_file {
        Some(path) => serde_json::from_str(&read_source(path)?)
            .map_err(|e| CliError::input(format!("{path}: {e}")))?,
        None => mineproto::ScenarioConfig {
            topology: match args.scenario {
                TopologyArg::Direct => mineproto::Topology::Direct,
                TopologyArg::Relay => mineproto::Topology::Relay,
            },
            target: args.target.clone(),
            throttle: args.throttle,
            seed: args.seed,
            max_shares: Some(args.shares),
            ..Default::default()
        },
    };
    let outcome = mineproto::run_scenario(&config).map_err(CliError::internal)?;
    if let Some(path) = &args.log {
        std::fs::write(path, mineproto::log_to_jsonl(&outcome.miner.entries))
            .map_err(|e| CliError::input(format!("{path}: {e}")))?;
    }
    // timestamps are wall clock; the report keeps only reproducible facts
    let kinds: Vec<String> = outcome
        .miner
        .entries
        .iter()
        .map(|e| format!("{:?}", e.frame.kind()))
        .collect();
    let report = json!({
        "topology": outcome.topology,
        "frame_sequence": kinds,
        "hashes_tried": outcome.miner.hashes_tried,
        "shares_accepted": outcome.miner.shares_accepted,
        "credited_hashes": outcome.credited_hashes,
        "content_status": outcome.content_verdict.status,
        "content_evidence_frames": outcome.content_verdict.evidence.len(),
        "blacklist_status": outcome.blacklist_verdict.status,
        "session_error": outcome.miner.error,
    });
    print!("{}", to_json(&report));
    Ok(())
}

// ----- econ -------------------------------------------------------------------

pub fn econ_cmd(args: &EconArgs) -> Result<(), CliError> {
    let config = load_config()?;
    let mut params = config.params;
    if let Some(v) = args.xmr_price {
        params.xmr_price_usd = v;
    }
    if let Some(v) = args.payout_rate {
        params.payout_xmr_per_mhash = v;
    }
    if let Some(v) = args.electricity_cost {
        params.electricity_usd_per_wh = v;
    }

    let mut report = serde_json::Map::new();

    if let Some(table) = args.sites {
        let rows: &[econ::fixtures::SiteTraffic] = match table {
            SiteTableArg::Top => &econ::fixtures::TOP_SITES,
            SiteTableArg::Dataset => &econ::fixtures::DATASET_SITES,
        };
        let sites: Vec<serde_json::Value> = rows
            .iter()
            .map(|s| {
                let usd = econ::site_monthly_revenue(
                    s.visits_per_month,
                    s.avg_visit_secs,
                    args.visitor_hash_rate,
                    &params,
                );
                json!({
                    "site": s.site,
                    "computed_usd": usd,
                    "recorded_usd": s.recorded_usd,
                    "delta_pct": 100.0 * (usd - s.recorded_usd) / s.recorded_usd,
                })
            })
            .collect();
        report.insert("sites".to_string(), json!(sites));
    }

    if let (Some(device_name), Some(alpha)) = (&args.device, args.alpha) {
        let device = config
            .devices
            .iter()
            .find(|d| &d.name == device_name)
            .cloned()
            .ok_or_else(|| CliError::input(format!("unknown device '{device_name}'")))?;
        let session = econ::session_report(&device, alpha, &params)
            .map_err(|e| CliError::input(e.to_string()))?;
        if let Some(path) = &args.battery_csv {
            let minutes = args.duration.unwrap_or(device.session_minutes);
            let trajectory =
                econ::simulate_battery(&device, econ::Throttle::Alpha(alpha), minutes)
                    .map_err(|e| CliError::input(e.to_string()))?;
            let mut csv = String::from("time_s,battery_pct\n");
            for (t, b) in trajectory {
                csv.push_str(&format!("{t},{b}\n"));
            }
            std::fs::write(path, csv).map_err(|e| CliError::input(format!("{path}: {e}")))?;
        }
        report.insert(
            "session".to_string(),
            serde_json::to_value(&session).expect("session serializes"),
        );
    } else if args.device.is_some() || args.alpha.is_some() {
        return Err(CliError::input(
            "session economics needs both --device and --alpha".to_string(),
        ));
    }

    if let Some(target_hex) = &args.pow_target {
        let target = parse_hex_target(target_hex)?;
        let model = econ::pow_block_model(target, args.network_hash_rate)
            .map_err(|e| CliError::input(e.to_string()))?;
        report.insert(
            "pow".to_string(),
            serde_json::to_value(model).expect("model serializes"),
        );
    }

    if report.is_empty() {
        return Err(CliError::input(
            "nothing to do: pass --device/--alpha, --sites, or --pow-target".to_string(),
        ));
    }
    print!("{}", to_json(&serde_json::Value::Object(report)));
    Ok(())
}

/// Parse up to 64 hex digits into the f64 the block model operates on.
fn parse_hex_target(hex: &str) -> Result<f64, CliError> {
    if hex.is_empty() || hex.len() > 64 || !hex.chars().all(|c| c.is_ascii_hexdigit()) {
        return Err(CliError::input(format!("bad target '{hex}'")));
    }
    let mut value = 0.0f64;
    for c in hex.chars() {
        value = value * 16.0 + c.to_digit(16).unwrap() as f64;
    }
    Ok(value)
}

// ----- scan --------------------------------------------------------------------

pub fn scan(args: &ScanArgs) -> Result<(), CliError> {
    let db = match &args.signatures {
        Some(path) => corpus::SignatureDb::from_json(&read_source(path)?)
            .map_err(|e| CliError::input(e.to_string()))?,
        None => corpus::default_signature_db(),
    };
    let records: Vec<corpus::SiteRecord> = if args.synthetic {
        corpus::synthetic::synthetic_dataset()
    } else if let Some(path) = &args.urls {
        read_source(path)?
            .lines()
            .map(|l| l.trim())
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|url| {
                let domain = url
                    .split_once("://")
                    .map(|(_, r)| r)
                    .unwrap_or(url)
                    .split(['/', ':', '?'])
                    .next()
                    .unwrap_or(url);
                corpus::SiteRecord::from_scan(domain, corpus::ScanResult::default())
            })
            .collect()
    } else if let Some(dir) = &args.dir {
        let mut out = Vec::new();
        let entries =
            std::fs::read_dir(dir).map_err(|e| CliError::input(format!("{dir}: {e}")))?;
        let mut paths: Vec<_> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "html" || x == "htm"))
            .collect();
        paths.sort();
        for path in paths {
            let html = std::fs::read_to_string(&path)
                .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
            let scan = corpus::scan_html(&html, &db).map_err(CliError::internal)?;
            let domain = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_default();
            out.push(corpus::SiteRecord::from_scan(&domain, scan));
        }
        out
    } else {
        return Err(CliError::input(
            "pass --dir <corpus>, --urls <list>, or --synthetic".to_string(),
        ));
    };

    if let Some(path) = &args.records {
        std::fs::write(path, corpus::records_to_jsonl(&records))
            .map_err(|e| CliError::input(format!("{path}: {e}")))?;
    }
    let report = corpus::aggregate(&records);
    print!("{}", to_json(&report));
    Ok(())
}
