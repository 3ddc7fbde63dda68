# reporting - Run reports (JSON and plain text)
