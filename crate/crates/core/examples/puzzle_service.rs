//! Drives the JSON puzzle API in process: opens a session, walks, previews
//! and undoes. Pass `--serve` to listen on 127.0.0.1:8080 instead.

use axum::body::Body;
use axum::http::Request;
use conway_core::service::{router, serve, AppState};
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &axum::Router, method: &str, uri: &str, body: Option<Value>) -> Value {
    let req = Request::builder()
        .method(method)
        .uri(uri)
        .header("content-type", "application/json")
        .body(body.map_or(Body::empty(), |b| Body::from(b.to_string())))
        .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    serde_json::from_slice(&bytes).unwrap()
}

#[tokio::main]
async fn main() -> std::io::Result<()> {
    if std::env::args().any(|a| a == "--serve") {
        return serve(8080).await;
    }
    let app = router(AppState::new());
    let s = call(&app, "POST", "/session", Some(json!({ "design": "pg23" }))).await;
    let id = s["id"].as_str().unwrap().to_string();
    println!("opened {id} with hole at {}", s["hole"]);

    for p in [11, 1, 0] {
        let preview = call(&app, "GET", &format!("/session/{id}/preview?point={p}"), None).await;
        println!("preview {p}: {}", preview["accumulated"]["cycles"]);
        call(&app, "POST", &format!("/session/{id}/move"), Some(json!({ "point": p }))).await;
    }
    let s = call(&app, "GET", &format!("/session/{id}"), None).await;
    println!("history {} in hole stabilizer: {}", s["history"], s["in_hole_stabilizer"]);

    let s = call(&app, "POST", &format!("/session/{id}/undo"), None).await;
    println!("after undo the hole is at {}", s["hole"]);
    Ok(())
}
