import init, { analyze, bound_curves, extremal } from "./pkg/fibindex_demo.js";

const SVG = "http://www.w3.org/2000/svg";
const EDGE_COLORS = { critical: "#c33", "safe-bridge": "#36c", safe: "#999" };

function el(name, attrs = {}, parent = null) {
  const node = document.createElementNS(SVG, name);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (parent) parent.appendChild(node);
  return node;
}

function parseEdges(edgeList) {
  const lines = edgeList.trim().split("\n");
  const [n] = lines[0].split(" ").map(Number);
  const edges = lines.slice(1).map((l) => {
    const [u, v] = l.split(" ").map(Number);
    return { u, v, kind: "safe" };
  });
  return { n, edges };
}

function drawGraph(svg, n, edges, size, labels = true) {
  svg.innerHTML = "";
  svg.setAttribute("width", size);
  svg.setAttribute("height", size);
  const r = size / 2 - (labels ? 20 : 6);
  const pos = Array.from({ length: n }, (_, i) => {
    const t = (2 * Math.PI * i) / Math.max(n, 1) - Math.PI / 2;
    return [size / 2 + r * Math.cos(t), size / 2 + r * Math.sin(t)];
  });
  for (const e of edges) {
    el("line", {
      x1: pos[e.u][0], y1: pos[e.u][1], x2: pos[e.v][0], y2: pos[e.v][1],
      stroke: EDGE_COLORS[e.kind], "stroke-width": labels ? 2.5 : 1.5,
    }, svg);
  }
  for (let i = 0; i < n; i++) {
    el("circle", { cx: pos[i][0], cy: pos[i][1], r: labels ? 11 : 3.5, fill: "#fff", stroke: "#222" }, svg);
    if (labels) {
      const t = el("text", { x: pos[i][0], y: pos[i][1] + 4, "text-anchor": "middle" }, svg);
      t.textContent = i;
    }
  }
}

function runAnalyze() {
  const error = document.getElementById("analyze-error");
  const facts = document.getElementById("facts");
  error.textContent = "";
  let a;
  try {
    a = JSON.parse(analyze(document.getElementById("graph-input").value));
  } catch (e) {
    error.textContent = String(e);
    return;
  }
  drawGraph(document.getElementById("drawing"), a.n, a.edges, 320);
  const rows = [
    ["vertices", a.n], ["edges", a.m], ["stability number", a.alpha], ["stable sets F", a.fib],
    ["alpha-critical", a.alpha_critical], ["connected", a.connected], ["tree", a.tree],
  ];
  for (const b of a.bounds) {
    rows.push([`${b.graph_class} bounds`, `${b.lower} ≤ ${b.fib} ≤ ${b.upper}`]);
    rows.push([`${b.graph_class} tight`, `lower ${b.lower_tight}, upper ${b.upper_tight}`]);
  }
  facts.innerHTML = rows.map(([k, v]) => `<tr><th>${k}</th><td>${v}</td></tr>`).join("");
}

function drawChart() {
  const n = Number(document.getElementById("curve-n").value);
  document.getElementById("curve-n-value").textContent = n;
  const points = JSON.parse(bound_curves(n));
  const svg = document.getElementById("chart");
  svg.innerHTML = "";
  const [w, h, pad] = [640, 320, 40];
  const log = (s) => Math.log10(Number(s));
  const top = log(points[points.length - 1].turan);
  const x = (alpha) => pad + ((w - 2 * pad) * (alpha - 1)) / Math.max(n - 1, 1);
  const y = (s) => h - pad - ((h - 2 * pad) * log(s)) / top;
  el("line", { x1: pad, y1: h - pad, x2: w - pad, y2: h - pad, stroke: "#222" }, svg);
  el("line", { x1: pad, y1: pad, x2: pad, y2: h - pad, stroke: "#222" }, svg);
  el("text", { x: w / 2, y: h - 8, "text-anchor": "middle" }, svg).textContent = "alpha";
  el("text", { x: 4, y: pad - 10 }, svg).textContent = "log10 F";
  for (let d = 0; d <= top; d += Math.max(1, Math.round(top / 6))) {
    el("text", { x: pad - 6, y: h - pad - ((h - 2 * pad) * d) / top + 4, "text-anchor": "end" }, svg)
      .textContent = d;
  }
  const series = [["lower", "#2a2"], ["turan_connected", "#36c"], ["turan", "#c33"]];
  for (const [key, color] of series) {
    const pts = points.filter((p) => p[key] !== null).map((p) => `${x(p.alpha)},${y(p[key])}`);
    el("polyline", { points: pts.join(" "), fill: "none", stroke: color, "stroke-width": 2 }, svg);
  }
}

function runSearch() {
  const n = Number(document.getElementById("search-n").value);
  const cls = document.getElementById("search-class").value;
  const table = document.getElementById("extremal");
  const error = document.getElementById("search-error");
  error.textContent = "";
  table.innerHTML = "";
  let rows;
  try {
    rows = JSON.parse(extremal(n, cls));
  } catch (e) {
    error.textContent = String(e);
    return;
  }
  table.innerHTML = "<tr><th>alpha</th><th>graphs</th><th>min F</th><th>minimizers</th>"
    + "<th>max F</th><th>bound</th><th>maximizers</th></tr>";
  for (const r of rows) {
    const tr = document.createElement("tr");
    const cells = [r.alpha, r.graph_count, r.min_fib, null, r.max_fib, r.upper, null];
    const pictures = { 3: r.minimizers, 6: r.maximizers };
    cells.forEach((c, i) => {
      const td = document.createElement("td");
      if (pictures[i]) {
        for (const list of pictures[i]) {
          const { n: order, edges } = parseEdges(list);
          const svg = el("svg");
          drawGraph(svg, order, edges, 60, false);
          td.appendChild(svg);
        }
      } else {
        td.textContent = c;
      }
      tr.appendChild(td);
    });
    table.appendChild(tr);
  }
}

await init();
const select = document.getElementById("search-n");
for (let n = 1; n <= 7; n++) select.add(new Option(n, n, n === 5, n === 5));
document.getElementById("analyze").addEventListener("click", runAnalyze);
document.getElementById("curve-n").addEventListener("input", drawChart);
document.getElementById("search").addEventListener("click", runSearch);
runAnalyze();
drawChart();
runSearch();
