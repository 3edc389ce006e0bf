mod common;

use std::io::{Read, Write};
use std::net::{TcpListener, TcpStream};
use std::sync::Arc;
use std::time::{Duration, Instant};

use axum::body::Body;
use axum::http::{Request, StatusCode};
use http_body_util::BodyExt;
use pennant::service::{router, AppState};
use pennant_core::{save_index, PennantOptions};
use tower::ServiceExt;

use common::*;

fn app() -> axum::Router {
    router(Arc::new(AppState {
        index: build(&c6_docs()),
        defaults: PennantOptions::default(),
    }))
}

async fn get(uri: &str) -> (StatusCode, String, String) {
    let resp = app()
        .oneshot(Request::get(uri).body(Body::empty()).unwrap())
        .await
        .unwrap();
    let status = resp.status();
    let ctype = resp
        .headers()
        .get("content-type")
        .map(|v| v.to_str().unwrap().to_string())
        .unwrap_or_default();
    let body = resp.into_body().collect().await.unwrap().to_bytes();
    (status, ctype, String::from_utf8(body.to_vec()).unwrap())
}

#[tokio::test]
async fn healthz() {
    let (status, ctype, body) = get("/healthz").await;
    assert_eq!(status, StatusCode::OK);
    assert!(ctype.starts_with("text/plain"));
    assert_eq!(body, "ok");
}

#[tokio::test]
async fn terms_listing() {
    let (status, ctype, body) = get("/terms?prefix=").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(ctype, "application/json");
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(
        v,
        serde_json::json!([
            {"term": "A", "df": 4}, {"term": "B", "df": 3},
            {"term": "C", "df": 4}, {"term": "D", "df": 1}
        ])
    );
    let (_, _, limited) = get("/terms?limit=2").await;
    assert_eq!(
        serde_json::from_str::<serde_json::Value>(&limited)
            .unwrap()
            .as_array()
            .unwrap()
            .len(),
        2
    );
    let (_, _, none) = get("/terms?prefix=Q").await;
    assert_eq!(none, "[]\n");
    let (status, _, _) = get("/terms?limit=-1").await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn pennant_json() {
    let (status, ctype, body) = get("/pennant?seed=A&min_co=1").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(ctype, "application/json");
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 2);
    assert_eq!(points[0]["term"], "B");
    // omitted parameters are echoed with their configured defaults
    assert_eq!(v["params"]["alpha"], 0.5);
    assert_eq!(v["params"]["log_base"], 10.0);
    // identical requests, identical bytes
    assert_eq!(get("/pennant?seed=A&min_co=1").await.2, body);
}

#[tokio::test]
async fn pennant_query_parameters() {
    let (status, _, body) =
        get("/pennant?seed=C&min_co=1&top_k=1&base=2&alpha=0.3&gamma=2&tau=0.4&n=12").await;
    assert_eq!(status, StatusCode::OK);
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["points"].as_array().unwrap().len(), 1);
    assert_eq!(v["n_docs"], 12);
    assert_eq!(v["params"]["log_base"], 2.0);
    assert_eq!(v["params"]["tau"], 0.4);
    // seeds with spaces arrive percent-encoded
    let (status, _, _) = get("/pennant?seed=%20A%20&min_co=1").await;
    assert_eq!(status, StatusCode::OK);
}

#[tokio::test]
async fn pennant_svg() {
    let (status, ctype, body) = get("/pennant.svg?seed=A&min_co=1").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(ctype, "image/svg+xml");
    roxmltree::Document::parse(&body).unwrap();
}

#[tokio::test]
async fn errors() {
    let (status, ctype, body) = get("/pennant?seed=Nope").await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(ctype, "application/json");
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["seed"], "Nope");
    assert!(v["error"].is_string());

    for bad in [
        "/pennant?seed=A&min_co=abc",
        "/pennant?seed=A&min_co=0",
        "/pennant?seed=A&base=1",
        "/pennant?seed=A&alpha=2",
        "/pennant?seed=A&top_k=x",
        "/pennant?seed=A&n=2",
        "/pennant",
        "/pennant.svg?seed=A&gamma=nan",
    ] {
        let (status, ctype, body) = get(bad).await;
        assert_eq!(status, StatusCode::BAD_REQUEST, "{bad}");
        assert_eq!(ctype, "application/json", "{bad}");
        assert!(serde_json::from_str::<serde_json::Value>(&body).unwrap()["error"].is_string());
    }
    assert_eq!(get("/pennant.svg?seed=Nope").await.0, StatusCode::NOT_FOUND);
}

fn http_get(addr: &str, path: &str) -> std::io::Result<String> {
    let mut s = TcpStream::connect(addr)?;
    write!(
        s,
        "GET {path} HTTP/1.1\r\nHost: {addr}\r\nConnection: close\r\n\r\n"
    )?;
    let mut out = String::new();
    s.read_to_string(&mut out)?;
    Ok(out)
}

#[test]
fn serve_binary_over_tcp_with_env_configuration() {
    let dir = tempfile::tempdir().unwrap();
    let idx = dir.path().join("c6.idx");
    std::fs::write(&idx, save_index(&build(&c6_docs()))).unwrap();
    let port = TcpListener::bind("127.0.0.1:0")
        .unwrap()
        .local_addr()
        .unwrap()
        .port();
    let addr = format!("127.0.0.1:{port}");

    let mut child = std::process::Command::new(env!("CARGO_BIN_EXE_pennant"))
        .arg("serve")
        .arg("--cors")
        .env("PENNANT_INDEX", &idx)
        .env("PENNANT_LISTEN", &addr)
        .env("RUST_LOG", "off")
        .spawn()
        .unwrap();

    let deadline = Instant::now() + Duration::from_secs(20);
    let health = loop {
        match http_get(&addr, "/healthz") {
            Ok(r) => break r,
            Err(_) if Instant::now() < deadline => std::thread::sleep(Duration::from_millis(50)),
            Err(e) => {
                child.kill().ok();
                panic!("service did not come up: {e}");
            }
        }
    };
    let pennant = http_get(&addr, "/pennant?seed=A&min_co=1").unwrap();
    child.kill().ok();
    child.wait().ok();

    assert!(health.starts_with("HTTP/1.1 200"), "{health}");
    assert!(health.ends_with("ok"));
    assert!(pennant.starts_with("HTTP/1.1 200"));
    assert!(pennant.contains("\"term\": \"B\""));
}

#[test]
fn serve_refuses_to_start_without_a_valid_index() {
    let o = std::process::Command::new(env!("CARGO_BIN_EXE_pennant"))
        .args(["serve", "/nonexistent.idx", "--listen", "127.0.0.1:0"])
        .env("RUST_LOG", "off")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
