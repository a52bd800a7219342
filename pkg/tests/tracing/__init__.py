# Tracing tests
