"""Certificate files and machine-readable reports.

Certificates travel as small JSON documents so they can be checked
independently of how they were produced; reports serialize to JSON (the
stable machine interface) and to markdown tables for eyeballing.
"""

import json
import tempfile
from pathlib import Path

from weylpath import (
    Parabolic, build,
    catalog_certificate, certificate_to_dict, check_certificate,
    dump_certificate, load_certificate, path_certificate,
    report_from_json, report_to_json, report_to_markdown, verify,
    verify_suite, suite_to_markdown,
)

rs = build("E7")
parab = Parabolic.maximal(7, 7)
cert = catalog_certificate(rs, parab, 7)
print("A tabulated certificate as a document:")
print(json.dumps(certificate_to_dict(cert), indent=2))

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "e7_d7.json"
    dump_certificate(cert, path)
    back = load_certificate(path)
    rep = check_certificate(rs, back)
    print(f"reloaded and checked: valid={rep.valid}, strict={rep.strict}, "
          f"cost={rep.cost}, path oracle={rep.dijkstra}")

print()
print("A path-extracted certificate for the odd orthogonal spin case B5:")
rsB = build("B5")
certB = path_certificate(rsB, Parabolic.maximal(5, 5), 5)
print(json.dumps(certificate_to_dict(certB), indent=2))
print("valid:", check_certificate(rsB, certB).valid)

print()
print("Report round trip (JSON is the frozen machine interface):")
rep = verify("D6", omitted=6)
text = report_to_json(rep)
assert report_from_json(text) == rep
print(text[:260], "...")
print()
print(report_to_markdown(rep))

print("A small verification sweep:")
print(suite_to_markdown(verify_suite(5)))
