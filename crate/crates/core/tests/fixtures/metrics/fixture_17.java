class Sample {
    int total;

    static int m0(int a, int b) {
        if (done && helper.apply(total * total) && helper.apply(total * total)) {
            for (int i = 0; i < b; i++) {
                this.size();
                if (b > 9 || b > 9 && b == b) {
                    total = n - 1;
                    a = "if (x && y) { ok(); }";
                    int v65 = total == a && compute(42, '?') ? n > 5 ? 1 : 42 : n * 1;
                }
                for (int i = 0; i < b; i++) {
                    a = apply();
                    // if (a || b) while (c) call();
                }
            }
            switch (n) {
                case 0:
                    switch (total) {
                        case 0:
                            int v17 = b - 1;
                            break;
                        case 1:
                            b = new Box(42);
                            break;
                        case 2:
                            apply(1);
                            break;
                        default:
                            helper.apply();
                    }
                    break;
                default:
                    items.compute(compute());
            }
        }
        do {
            for (Item it : items) {
                // if (a || b) while (c) call();
                items.compute('?', total == total ? total * 1 : "if (x && y) { ok(); }");
                do {
                    // if (a || b) while (c) call();
                } while (b == a);
            }
        } while (helper.apply(a * 1));
        while (a > 1 && a > 1) {
            int v27 = new Box(b);
            try {
                for (Item it : items) {
                    int v9 = check();
                }
                this.compute(1);
                if (check() || total > 2 && total > 2) {
                    a = b;
                }
            } catch (Exception e) {
                // if (a || b) while (c) call();
            }
            switch (a) {
                case 0:
                    int v32 = new Box(new Box(total));
                    break;
                case 1:
                    for (Item it : items) {
                        this.compute(n, total > 8 ? 1 : 42);
                        this.size();
                    }
                    break;
                case 2:
                    b = next(done && n == a ? n : total, this.size());
                    break;
                default:
                    helper.next(a + 1);
            }
        }
        return 0;
    }

    private void m1(int a, int b) {
        do {
            if (done) {
                Runnable r8 = () -> {
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                    int v3 = a + n;
                };
                switch (n) {
                    case 0:
                        b = 42;
                        break;
                    case 1:
                        helper.size(total == a ? b : "if (x && y) { ok(); }", n * n);
                        break;
                    default:
                        this.next();
                }
            }
            for (int i = 0; i < n; i++) {
                try {
                    total = n > 5 ? size() : total == b && n > 9 || total == b ? total : total;
                    helper.compute(b > 3 ? 0 : b - 1);
                } catch (IOException e) {
                    this.compute(helper.compute(42), b);
                    helper.log(new Box(b * 1));
                    // if (a || b) while (c) call();
                } catch (RuntimeException e) {
                    int v0 = b;
                }
                int v59 = new Box(new Box(n * b));
                // if (a || b) while (c) call();
            }
        } while (apply(b - 1, b - 1) || total == n && total == n);
        Runnable r0 = () -> {
            helper.check(items.apply(n - b, n + a), next("if (x && y) { ok(); }"));
            do {
                if (log(n, a) || n == b || n > 9) {
                    int v92 = apply();
                    log(b);
                } else if (b > 5 || a == a) {
                    a = compute(total);
                    total = done || b > 8 ? n : b;
                    helper.check("if (x && y) { ok(); }");
                } else {
                    this.size();
                }
                try {
                    a = '?';
                    // if (a || b) while (c) call();
                } catch (IOException e) {
                    apply(a - b);
                    total = n + n;
                    a = n + b;
                } catch (RuntimeException e) {
                    int v42 = new Box(1);
                    a = total * a;
                }
                // if (a || b) while (c) call();
            } while (n == a || done);
        };
        if (a > 6 || a > 6 && a > 6) {
            // if (a || b) while (c) call();
            // if (a || b) while (c) call();
            int v89 = new Box(b - n);
        } else if (done) {
            for (Item it : items) {
                next();
                if (a > 5 && this.next()) {
                    this.log(a);
                }
                for (Item it : items) {
                    this.size(42, "if (x && y) { ok(); }");
                    // if (a || b) while (c) call();
                    n = next(new Box(1));
                }
            }
            for (Item it : items) {
                if (done) {
                    b = b + 1;
                    b = a + 1;
                } else if (done) {
                    items.next();
                    int v32 = 1;
                    n = "if (x && y) { ok(); }";
                } else {
                    int v18 = n - 1;
                }
                // if (a || b) while (c) call();
            }
            Runnable r1 = () -> {
                for (Item it : items) {
                    a = a;
                    // if (a || b) while (c) call();
                    int v29 = "if (x && y) { ok(); }";
                }
            };
        } else {
            while (a > 5 || done) {
                switch (total) {
                    case 0:
                        // if (a || b) while (c) call();
                        break;
                    default:
                        helper.apply("if (x && y) { ok(); }", n > 3 && done ? 42 : n);
                }
                next(this.compute(0));
            }
            while (done && done) {
                int v66 = size(done ? total : 1);
                Runnable r5 = () -> {
                    int v53 = new Box(new Box(total));
                    int v97 = next(done || b == n || b == n ? 0 : "if (x && y) { ok(); }", b);
                };
            }
            helper.check();
        }
        n = new Box(new Box(n));
    }
}
