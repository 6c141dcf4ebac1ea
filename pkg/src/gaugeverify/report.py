"""Report entries and the JSON / JUnit writers."""

import json
import xml.etree.ElementTree as ET
from fractions import Fraction


class Entry:
    """One verified assertion: check name, anchor text, parameters, verdict."""

    __slots__ = ("check", "anchor", "params", "ok", "detail", "skipped", "level")

    def __init__(self, check, anchor, params, ok, detail="", skipped=False, level=None):
        self.check = check
        self.anchor = anchor
        self.params = dict(params)
        self.ok = bool(ok)
        self.detail = detail
        self.skipped = bool(skipped)
        # "chart" marks identities checked on the multi-type charts rather than
        # on the deformation ring itself
        self.level = level

    @classmethod
    def skip(cls, check, anchor, params, reason):
        return cls(check, anchor, params, True, reason, skipped=True)

    @property
    def verdict(self):
        if self.skipped:
            return "skip"
        return "pass" if self.ok else "fail"

    def as_dict(self):
        d = {"check": self.check, "anchor": self.anchor, "params": _plain(self.params),
             "verdict": self.verdict, "detail": self.detail}
        if self.level:
            d["level"] = self.level
        return d

    def __repr__(self):
        return "Entry(%s, %s, %s)" % (self.check, self.anchor, self.verdict)


def _plain(x):
    """Convert to JSON-friendly values with a stable layout."""
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (bool, int, float, str)) or x is None:
        return x
    return str(x)


class Report:
    def __init__(self, groups=None):
        # list of (job id, [entries]) in submission order
        self.groups = list(groups or [])

    def add(self, job, entries):
        self.groups.append((job, list(entries)))

    @property
    def entries(self):
        return [e for _, es in self.groups for e in es]

    def failures(self):
        return [e for e in self.entries if e.verdict == "fail"]

    def summary(self):
        out = {"pass": 0, "fail": 0, "skip": 0}
        for e in self.entries:
            out[e.verdict] += 1
        out["total"] = sum(out.values())
        return out

    @property
    def ok(self):
        return not self.failures()

    def as_list(self):
        out = []
        for job, es in self.groups:
            for i, e in enumerate(es):
                d = e.as_dict()
                d["id"] = "%s#%d" % (job, i)
                out.append(d)
        return out

    def to_json(self):
        return json.dumps({"summary": self.summary(), "entries": self.as_list()},
                          indent=2, sort_keys=True) + "\n"

    def to_junit(self):
        s = self.summary()
        root = ET.Element("testsuites", tests=str(s["total"]), failures=str(s["fail"]),
                          skipped=str(s["skip"]))
        for job, es in self.groups:
            suite = ET.SubElement(root, "testsuite", name=job, tests=str(len(es)),
                                  failures=str(sum(e.verdict == "fail" for e in es)),
                                  skipped=str(sum(e.skipped for e in es)))
            for i, e in enumerate(es):
                name = "%d: %s" % (i, e.anchor)
                if e.level:
                    name += " [%s-level]" % e.level
                case = ET.SubElement(suite, "testcase", classname="%s.%s" % (job, e.check), name=name)
                if e.verdict == "fail":
                    ET.SubElement(case, "failure", message=e.detail or "assertion failed").text = \
                        json.dumps(_plain(e.params), sort_keys=True)
                elif e.skipped:
                    ET.SubElement(case, "skipped", message=e.detail)
        ET.indent(root)
        return ET.tostring(root, encoding="unicode") + "\n"

    def text_summary(self):
        lines = []
        for job, es in self.groups:
            bad = sum(e.verdict == "fail" for e in es)
            skip = sum(e.skipped for e in es)
            lines.append("%-40s %4d entries  %s%s" % (job, len(es), "FAIL(%d)" % bad if bad else "ok",
                                                      "  skipped %d" % skip if skip else ""))
        s = self.summary()
        lines.append("total %d: %d pass, %d fail, %d skip" % (s["total"], s["pass"], s["fail"], s["skip"]))
        return "\n".join(lines)
