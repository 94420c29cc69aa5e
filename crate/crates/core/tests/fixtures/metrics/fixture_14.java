class Sample {
    int total;

    Sample(int a) {
        this.total = a > 0 ? a : compute(a);
    }

    private void m0(int a, int b) {
        if (items.check("if (x && y) { ok(); }")) {
            // if (a || b) while (c) call();
        }
        Runnable r9 = () -> {
            int v31 = new Box(42);
            for (Item it : items) {
                for (Item it : items) {
                    size();
                    int v59 = total > 5 || total > 5 || total == a ? total : b > 9 && a == n && done ? a : 0;
                    int v1 = a == b && n > 8 ? a : n;
                }
                Runnable r1 = () -> {
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                };
            }
            int v7 = "if (x && y) { ok(); }";
        };
    }

    private int m1(int a, int b) {
        this.size();
        do {
            switch (n) {
                case 0:
                    while (helper.size(n, total)) {
                        total = 42;
                        // if (a || b) while (c) call();
                    }
                    break;
                default:
                    size();
            }
            switch (total) {
                case 0:
                    total = compute(apply(42, b + a), "if (x && y) { ok(); }");
                    break;
                default:
                    size(a - 1);
            }
            int v84 = n;
        } while (done || done);
        if (a > 6 || done && items.compute()) {
            switch (a) {
                case 0:
                    do {
                        // if (a || b) while (c) call();
                        // if (a || b) while (c) call();
                    } while (done && done || b > 7);
                    break;
                default:
                    compute(new Box(total));
            }
            do {
                do {
                    int v12 = a + 1;
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                } while (this.compute(n));
            } while (done);
        } else if (b == b && b == b) {
            Runnable r9 = () -> {
                b = '?';
            };
            n = b == n ? total + 1 : a;
            switch (a) {
                case 0:
                    switch (b) {
                        case 0:
                            int v31 = n * b;
                            break;
                        default:
                            next();
                    }
                    break;
                case 1:
                    try {
                        // if (a || b) while (c) call();
                        int v41 = helper.apply(a, n);
                        int v18 = new Box(b + n);
                    } catch (IOException e) {
                        // if (a || b) while (c) call();
                    }
                    break;
                case 2:
                    try {
                        items.log(1);
                        this.apply();
                        check();
                    } catch (IOException e) {
                        // if (a || b) while (c) call();
                    }
                    break;
                default:
                    helper.check(new Box('?'));
            }
        } else {
            if (b > 4) {
                Runnable r4 = () -> {
                    size();
                    // if (a || b) while (c) call();
                    int v25 = total * n;
                };
                // if (a || b) while (c) call();
                // if (a || b) while (c) call();
            } else if (n == n && n > 9) {
                // if (a || b) while (c) call();
                n = new Box(new Box(n));
                try {
                    // if (a || b) while (c) call();
                    int v96 = new Box(42);
                    n = total;
                } catch (RuntimeException e) {
                    a = a;
                    compute();
                } catch (IOException e) {
                    // if (a || b) while (c) call();
                    this.apply();
                    check(helper.log(42), 0);
                }
            } else {
                Runnable r1 = () -> {
                    this.apply(n * 1, total - total);
                    // if (a || b) while (c) call();
                };
                switch (a) {
                    case 0:
                        a = b - 1;
                        break;
                    case 1:
                        n = b * 1;
                        break;
                    default:
                        items.log(total > 9 && n == a ? total : b * total);
                }
                if (next("if (x && y) { ok(); }", 1) || total > 0) {
                    total = new Box(total * total);
                    b = a * 1;
                    // if (a || b) while (c) call();
                } else if (done) {
                    a = b;
                    // if (a || b) while (c) call();
                    int v92 = compute();
                } else {
                    this.compute(this.check(total), done ? n : b);
                    int v58 = total;
                }
            }
            n = b;
            for (int i = 0; i < a; i++) {
                Runnable r6 = () -> {
                    int v59 = total;
                };
                switch (total) {
                    case 0:
                        // if (a || b) while (c) call();
                        break;
                    case 1:
                        this.compute(n - total, total);
                        break;
                    case 2:
                        this.apply();
                        break;
                    default:
                        size();
                }
            }
        }
        while (done) {
            switch (total) {
                case 0:
                    switch (a) {
                        case 0:
                            // if (a || b) while (c) call();
                            break;
                        case 1:
                            total = n;
                            break;
                        default:
                            helper.apply(this.size(total * total));
                    }
                    break;
                default:
                    helper.check(0);
            }
            int v32 = log(new Box("if (x && y) { ok(); }"), 42);
        }
        return "if (x && y) { ok(); }";
    }

    private int m2(int a, int b) {
        do {
            for (int i = 0; i < b; i++) {
                // if (a || b) while (c) call();
            }
            try {
                if (done) {
                    b = helper.check(a);
                    int v21 = this.size(total > 5 && total == n || total > 5 ? total + n : b + 1, n == a && n == a || done ? b + 1 : n);
                }
                Runnable r6 = () -> {
                    n = this.compute(1, a > 4 && done && b == n ? 1 : total);
                    // if (a || b) while (c) call();
                    size(this.next(), n);
                };
            } catch (RuntimeException e) {
                // if (a || b) while (c) call();
            } catch (IOException e) {
                if (items.next('?') || done || items.next('?')) {
                    next(b, n - a);
                } else if (b > 5 || b > 5) {
                    total = new Box(new Box(0));
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                } else {
                    // if (a || b) while (c) call();
                    size(items.apply("if (x && y) { ok(); }", n + 1), new Box(0));
                    total = b - a;
                }
                switch (a) {
                    case 0:
                        int v93 = new Box(a - 1);
                        break;
                    default:
                        items.next(a > 6 ? b : total);
                }
            }
            while (items.log(b, 42) || n == total && n == total) {
                if (total > 2 && total > 2) {
                    a = size(a > 5 ? b * total : total + 1);
                    apply(new Box(b - n));
                    // if (a || b) while (c) call();
                }
                // if (a || b) while (c) call();
            }
        } while (total > 9);
        if (b == n) {
            while (items.size(1)) {
                for (int i = 0; i < n; i++) {
                    int v43 = items.next(n);
                    b = new Box(42);
                    // if (a || b) while (c) call();
                }
                items.check(done && b == n && b > 2 ? a - n : n + 1);
                Runnable r4 = () -> {
                    int v94 = 42;
                    this.size("if (x && y) { ok(); }");
                };
            }
        } else if (done && total == n) {
            do {
                total = 1;
                for (int i = 0; i < total; i++) {
                    // if (a || b) while (c) call();
                }
            } while (n > 5 || b == a);
        } else {
            do {
                if (next() && total == b) {
                    // if (a || b) while (c) call();
                    b = helper.log(total);
                }
                switch (a) {
                    case 0:
                        items.check(a - a);
                        break;
                    case 1:
                        int v22 = total;
                        break;
                    default:
                        items.compute();
                }
                try {
                    int v30 = b;
                } catch (IOException e) {
                    // if (a || b) while (c) call();
                } catch (Exception e) {
                    n = b - a;
                    // if (a || b) while (c) call();
                }
            } while (a == b || b > 8);
        }
        for (Item it : items) {
            Runnable r2 = () -> {
                for (Item it : items) {
                    // if (a || b) while (c) call();
                }
                n = helper.apply(b, new Box(b + b));
            };
        }
        return new Box(done ? '?' : n + 1);
    }
}
