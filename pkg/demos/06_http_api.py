"""Serve a catalog over HTTP and query it like the web UI does.

Run from the repo root:  python3 demos/06_http_api.py
"""

import threading
import time

import requests
import uvicorn

from skyfilter import generate_synthetic
from skyfilter.api import create_app

catalog = generate_synthetic(5000, seed=9)
app = create_app(catalog)

config = uvicorn.Config(app, host="127.0.0.1", port=8765, log_level="warning")
server = uvicorn.Server(config)
thread = threading.Thread(target=server.run, daemon=True)
thread.start()
while not server.started:
    time.sleep(0.05)
base = "http://127.0.0.1:8765"
print(f"serving {len(catalog)} services at {base}")

schema = requests.get(f"{base}/schema").json()
print(f"\nGET /schema: {len(schema['dimensions'])} dimensions, "
      f"{len(schema['fixed_attributes'])} fixed attributes")

stats = requests.get(f"{base}/catalog/stats").json()
lat = stats["dimensions"]["latency"]
print(f"GET /catalog/stats: {stats['count']} services, "
      f"latency range [{lat['min']:.1f}, {lat['max']:.1f}]")

resp = requests.post(f"{base}/query?limit=3", json={
    "fixed": {"provider": "Google"},
    "optimize": [
        {"dim": "latency", "importance": "extremely_important"},
        {"dim": "acquisition_cost"},
    ],
})
body = resp.json()
print(f"\nPOST /query: {body['filtered_count']} filtered -> "
      f"{body['skyline_count']} skyline -> {body['final_count']} final")
print(f"limit=3 returns {len(body['final'])} of them inline")

# Errors come back as {"code", "message", "field"?} with a stable code set.
bad = requests.post(f"{base}/query", json={"optimize": []})
print(f"\ninvalid query -> HTTP {bad.status_code}: {bad.json()}")

server.should_exit = True
thread.join(timeout=5)
print("\nserver stopped")
