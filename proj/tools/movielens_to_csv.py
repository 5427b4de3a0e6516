#!/usr/bin/env python3
# Copyright 2026 The seqsub Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Converts a MovieLens ratings file to a user,item,timestamp log.

Accepts ratings.csv (userId,movieId,rating,timestamp) and the older
ratings.dat format (UserID::MovieID::Rating::Timestamp).
"""

import argparse
import csv
import sys


def rows(path):
    with open(path, newline="", encoding="utf-8") as f:
        if path.endswith(".dat"):
            for line in f:
                parts = line.strip().split("::")
                if len(parts) >= 4:
                    yield parts[0], parts[1], parts[3]
            return
        for rec in csv.DictReader(f):
            yield rec["userId"], rec["movieId"], rec["timestamp"]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("ratings", help="ratings.csv or ratings.dat")
    ap.add_argument("-o", "--output", help="output path (default stdout)")
    args = ap.parse_args()

    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["user", "item", "timestamp"])
        for user, item, ts in rows(args.ratings):
            w.writerow([user, item, ts])
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    main()
