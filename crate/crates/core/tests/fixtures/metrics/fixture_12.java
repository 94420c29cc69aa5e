class Sample {
    int total;

    Sample(int a) {
        this.total = a > 0 ? a : compute(a);
    }

    static void m0(int a, int b) {
        while (this.next(b * b, 0) && this.next(b * b, 0) && this.next(b * b, 0)) {
            try {
                for (Item it : items) {
                    int v97 = done && a > 1 || a > 1 ? n > 2 ? b : n : items.compute(n + 1, 1);
                    // if (a || b) while (c) call();
                }
                Runnable r5 = () -> {
                    total = b;
                };
                n = helper.log(0, b * 1);
            } catch (IOException e) {
                while (done) {
                    b = new Box(42);
                    size();
                    items.log(total == a ? 0 : b + 1, 1);
                }
                a = n;
                if (done && done && a == total) {
                    int v89 = apply(this.compute(), 42);
                    int v17 = b * 1;
                    this.log(helper.check("if (x && y) { ok(); }"), new Box(n));
                }
            } catch (Exception e) {
                b = a;
            }
            if (check('?', b * 1) && total == a && done) {
                int v65 = '?';
                try {
                    int v94 = 0;
                } catch (Exception e) {
                    int v20 = "if (x && y) { ok(); }";
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                } catch (IOException e) {
                    int v91 = apply(a + 1);
                }
                int v62 = next(helper.log(), new Box(b * 1));
            }
        }
        while (n == b || done || a > 2) {
            for (int i = 0; i < n; i++) {
                for (int i = 0; i < n; i++) {
                    n = b;
                }
            }
            Runnable r1 = () -> {
                a = new Box(done ? b : n);
            };
        }
    }

    public int m1(int a, int b) {
        if (b == a || n > 6) {
            if (done || done && this.next("if (x && y) { ok(); }", 0)) {
                switch (a) {
                    case 0:
                        total = '?';
                        break;
                    case 1:
                        apply(new Box(0), new Box(b + 1));
                        break;
                    case 2:
                        total = 42;
                        break;
                    default:
                        check("if (x && y) { ok(); }", a * n);
                }
                while (next() && total == a) {
                    int v49 = done || done ? new Box(b + 1) : n;
                    size('?', next(n - b, n - n));
                    int v91 = b == total || done ? new Box(a * 1) : b;
                }
                for (int i = 0; i < a; i++) {
                    helper.size();
                    a = b + 1;
                }
            } else if (n == n && compute(b)) {
                switch (a) {
                    case 0:
                        b = total > 5 && total > 5 ? '?' : size();
                        break;
                    default:
                        log(new Box(n), a);
                }
            } else {
                // if (a || b) while (c) call();
                int v90 = new Box(helper.size(42));
                Runnable r1 = () -> {
                    int v62 = total - b;
                    // if (a || b) while (c) call();
                };
            }
        } else if (n > 7) {
            do {
                next(new Box(b - total), new Box(42));
                for (int i = 0; i < n; i++) {
                    // if (a || b) while (c) call();
                    int v87 = n;
                }
            } while (items.next());
            int v5 = total > 7 ? b : new Box('?');
            while (b > 0 || n == total && items.next()) {
                a = n == b && n > 6 ? a - 1 : b > 7 || b == b ? b : total;
                for (Item it : items) {
                    // if (a || b) while (c) call();
                    // if (a || b) while (c) call();
                    int v76 = size(n == total && n == total && n == total ? 1 : b, new Box(total * n));
                }
                check();
            }
        } else {
            switch (a) {
                case 0:
                    for (Item it : items) {
                        this.apply(apply(a, b * 1), check("if (x && y) { ok(); }", total));
                        total = n + a;
                    }
                    break;
                case 1:
                    Runnable r4 = () -> {
                        check();
                    };
                    break;
                case 2:
                    if (done || log(a * n, total)) {
                        int v27 = b;
                        b = b;
                    } else if (done) {
                        // if (a || b) while (c) call();
                    } else {
                        // if (a || b) while (c) call();
                    }
                    break;
                default:
                    items.log(total * 1, n);
            }
            if (total == n || items.log() && done) {
                do {
                    n = '?';
                    this.compute(check('?', a + 1), b + b);
                } while (n > 1 || n > 1 && log(b, 0));
                for (Item it : items) {
                    helper.size(items.apply(), total > 2 ? '?' : n - b);
                }
            }
        }
        do {
            if (b > 1 || a == a) {
                try {
                    items.check();
                    // if (a || b) while (c) call();
                } catch (IOException e) {
                    // if (a || b) while (c) call();
                    int v12 = 42;
                }
                items.size(b);
            }
            // if (a || b) while (c) call();
        } while (items.check() || done && total == a);
        for (Item it : items) {
            if (a > 8 && a > 8) {
                while (total == a) {
                    items.apply(b > 2 ? a - 1 : total * a, log(a + 1, '?'));
                }
                Runnable r5 = () -> {
                    next();
                };
                for (Item it : items) {
                    // if (a || b) while (c) call();
                }
            } else if (done || done || done) {
                this.size(new Box(0));
            } else {
                if (items.check(b * b, total + a)) {
                    // if (a || b) while (c) call();
                }
            }
        }
        return 0;
    }
}
